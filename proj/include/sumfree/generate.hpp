#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sumfree/universe.hpp"

namespace sumfree {

// Seeded generator with platform-independent output: std::mt19937_64 is
// fully specified by the standard, and the range reduction below does not
// depend on any library distribution.
class SplitRng {
 public:
  static constexpr const char* kName = "mt19937_64-rejection-v1";

  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct RandomGenConfig {
  std::int64_t seed_element = 1;        // a
  std::int64_t target_cardinality = 1;  // b
  std::int64_t sample_hi = 100;
  std::uint64_t max_iterations = 1'000'000;
  std::uint64_t rng_seed = 0;
};

// Randomised nested growth: S starts as {a}; each pass draws s uniformly
// from [1, sample_hi] and a fair coin, and keeps S + {s} only when it is
// sum-free and the coin lands on 1. Returns nullopt if |S| < b after
// max_iterations passes.
std::optional<ElemSet> cameron_random(const RandomGenConfig& cfg);

struct PrimeChoice {
  std::uint64_t prime = 0;
  double l = 0;        // sum of log2 of the inputs
  double bound = 0;    // 3 l ln l
  bool bound_satisfied = false;
};

// Smallest prime p = 2 (mod 3) dividing no member of a.
PrimeChoice find_prime(const std::vector<std::uint64_t>& a);

// Counts per nonzero residue mod p; every residue 1..p-1 has an entry.
std::map<std::uint64_t, std::uint64_t> residue_weights(const std::vector<std::uint64_t>& a,
                                                       std::uint64_t p);

// Smallest t in 1..p-1 whose dilate carries weight > n/3 into B.
std::uint64_t find_dilator(const std::map<std::uint64_t, std::uint64_t>& weights,
                           std::uint64_t p);

std::uint64_t mod_inverse(std::uint64_t t, std::uint64_t p);

struct KolountzakisTrace {
  std::vector<std::uint64_t> input;
  std::uint64_t n = 0;
  double l = 0;
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::map<std::uint64_t, std::uint64_t> weights;
  std::uint64_t total_weight = 0;
  std::uint64_t t = 0;
  std::uint64_t t_inverse = 0;
  std::vector<std::uint64_t> s_prime;  // residues of t^{-1} B, ascending
  std::vector<std::uint64_t> result;   // members of the input, ascending
  double prime_bound = 0;
  bool bound_satisfied = false;
};

// Polynomial-time extraction of a sum-free subset of size > |a|/3 from a
// set of distinct positive integers.
KolountzakisTrace kolountzakis(const std::vector<std::uint64_t>& a);

}  // namespace sumfree
