#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumfree/enumerate.hpp"
#include "sumfree/group.hpp"
#include "sumfree/rational.hpp"
#include "sumfree/universe.hpp"

namespace sumfree {

// Closed-form maximum sum-free density, by the prime divisors of |G|:
//   case 1: 1/3 + 1/(3p), p the least prime = 2 (mod 3) dividing |G|;
//   case 2: 1/3, otherwise when 3 divides |G|;
//   case 3: 1/3 - 1/(3m), every prime divisor = 1 (mod 3), m = exponent.
struct DensityFormula {
  Rational v;
  int v_case = 0;
};

DensityFormula v_of(const GroupSpec& g);

struct DensityReport {
  GroupSpec group;
  Rational mu;
  ElemSet witness;
  std::size_t max_cardinality = 0;
  Rational v;
  int v_case = 0;
  bool agree = false;
};

// Exhaustive maximum sum-free density compared against v_of.
DensityReport mu_of(const GroupSpec& g, std::size_t max_ground = kDefaultSearchGround);

struct Index2Report {
  std::size_t half_size_sets = 0;
  std::size_t index2_subgroups = 0;
  std::size_t max_cardinality = 0;
  bool equality = false;
};

// Sum-free sets of size |G|/2 are exactly the complements of index-2
// subgroups. Throws kNotApplicable for odd order.
Index2Report index2_report(const GroupSpec& g, std::size_t max_ground = kDefaultSearchGround);
bool check_index2_equality(const GroupSpec& g, std::size_t max_ground = kDefaultSearchGround);

// Max sum-free cardinality is at least |G|/q, q the least prime divisor.
bool babai_sos_floor(const GroupSpec& g, std::size_t max_ground = kDefaultSearchGround);

struct DivisorSlack {
  std::uint64_t d = 0;
  Rational slack;  // weighted density - 2/7
};

struct AkReport {
  std::uint64_t n = 0;
  bool holds = true;
  std::vector<DivisorSlack> divisors;
  Rational min_slack;
  std::uint64_t min_divisor = 0;
};

// 4/7 |dZ_n n A1|/|dZ_n| + 3/7 |dZ_n n A2|/|dZ_n| >= 2/7 for every divisor
// d < n of n, exactly.
AkReport ak_report(std::uint64_t n);
bool ak_inequality(std::uint64_t n);

enum class FreimanVerdict { kPass, kVacuous, kFail };

struct FreimanResult {
  FreimanVerdict verdict = FreimanVerdict::kVacuous;
  std::string violated;  // empty unless kFail
};

// For sum-free S in an interval with k = max(S) and |S| >= 5k/12 + 2:
// S is all odd, or has mixed parity with min(S) >= |S| and
// |S n [1, k/2]| <= (k - 2|S| + 3)/4.
FreimanResult freiman_check(const ElemSet& s);

// f(n) / (f(ceil(n/3), n) + 2^ceil(n/2)).
Rational sapozhenko_ratio(std::int64_t n, std::size_t max_ground = kDefaultSearchGround);

struct Size1Hit {
  GroupSpec group;
  std::vector<Element> witnesses;
  bool witnesses_prime_order = true;
};

// Abelian groups of order 2..max_order with a maximal sum-free set of
// size 1.
std::vector<Size1Hit> giudici_size1_scan(std::uint64_t max_order);

// Every maximal sum-free set of size 2 in abelian groups of order
// 2..max_order.
std::vector<std::pair<GroupSpec, ElemSet>> giudici_size2_scan(std::uint64_t max_order);

struct LevTerm {
  std::uint64_t leading = 0;  // (2^V(G) - 1) 2^(|G|/2)
  std::uint64_t f = 0;
  Rational ratio;             // f / leading
};

// Throws kNotApplicable for odd order.
LevTerm lev_leading_term(const GroupSpec& g, std::size_t max_ground = kDefaultSearchGround);

}  // namespace sumfree
