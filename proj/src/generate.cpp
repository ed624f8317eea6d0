#include "sumfree/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "sumfree/construct.hpp"
#include "sumfree/error.hpp"

namespace sumfree {

std::uint64_t SplitRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  // Largest multiple of range representable; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return lo + x % range;
}

std::optional<ElemSet> cameron_random(const RandomGenConfig& cfg) {
  if (cfg.target_cardinality < 1)
    throw Error(ErrorCode::kInvalidArgument, "target cardinality must be at least 1");
  if (cfg.sample_hi < 1 || cfg.seed_element < 1 || cfg.seed_element > cfg.sample_hi)
    throw Error(ErrorCode::kInvalidArgument, "seed element must lie in [1, sample_hi]");
  if (cfg.max_iterations < 1)
    throw Error(ErrorCode::kInvalidArgument, "max_iterations must be at least 1");

  auto u = Universe::interval(1, cfg.sample_hi);
  ElemSet s(u);
  s.insert(cfg.seed_element);
  SplitRng rng(cfg.rng_seed);
  const auto target = static_cast<std::size_t>(cfg.target_cardinality);
  for (std::uint64_t pass = 0; s.cardinality() < target && pass < cfg.max_iterations; ++pass) {
    const auto x = static_cast<std::int64_t>(rng.uniform(1, static_cast<std::uint64_t>(cfg.sample_hi)));
    const bool coin = rng.coin();
    ElemSet grown = s;
    grown.insert(x);
    if (coin && is_sum_free(u, grown)) s = std::move(grown);
  }
  if (s.cardinality() < target) return std::nullopt;
  return s;
}

PrimeChoice find_prime(const std::vector<std::uint64_t>& a) {
  if (a.empty()) throw Error(ErrorCode::kInvalidArgument, "input set is empty");
  PrimeChoice out;
  for (auto x : a) {
    if (x == 0) throw Error(ErrorCode::kInvalidArgument, "inputs must be positive integers");
    out.l += std::log2(static_cast<double>(x));
  }
  for (std::uint64_t p = 2;; p = (p == 2 ? 5 : p + 6)) {
    if (!is_prime(p)) continue;
    if (std::none_of(a.begin(), a.end(), [p](std::uint64_t x) { return x % p == 0; })) {
      out.prime = p;
      break;
    }
  }
  out.bound = out.l > 1 ? 3 * out.l * std::log(out.l) : 0.0;
  out.bound_satisfied = static_cast<double>(out.prime) <= out.bound;
  return out;
}

std::map<std::uint64_t, std::uint64_t> residue_weights(const std::vector<std::uint64_t>& a,
                                                       std::uint64_t p) {
  std::map<std::uint64_t, std::uint64_t> w;
  for (std::uint64_t r = 1; r < p; ++r) w[r] = 0;
  for (auto x : a) {
    if (x % p == 0)
      throw Error(ErrorCode::kInvalidPrime,
                  std::to_string(p) + " divides input member " + std::to_string(x));
    ++w[x % p];
  }
  return w;
}

std::uint64_t mod_inverse(std::uint64_t t, std::uint64_t p) {
  // Extended Euclid on signed values.
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(t % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const auto q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw Error(ErrorCode::kInvalidArgument, "value is not invertible modulo p");
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((s0 % m) + m) % m);
}

std::uint64_t find_dilator(const std::map<std::uint64_t, std::uint64_t>& weights,
                           std::uint64_t p) {
  const auto k = (p - 2) / 3;
  std::uint64_t n = 0;
  for (const auto& [r, c] : weights) n += c;
  for (std::uint64_t t = 1; t < p; ++t) {
    std::uint64_t carried = 0;
    for (const auto& [r, c] : weights) {
      const auto image = (t * r) % p;
      if (image >= k + 1 && image <= 2 * k + 1) carried += c;
    }
    if (3 * carried > n) return t;
  }
  throw Error(ErrorCode::kInternal, "no dilator found; averaging bound violated");
}

KolountzakisTrace kolountzakis(const std::vector<std::uint64_t>& a) {
  if (std::set<std::uint64_t>(a.begin(), a.end()).size() != a.size())
    throw Error(ErrorCode::kInvalidArgument, "input members must be distinct");
  KolountzakisTrace tr;
  tr.input = a;
  tr.n = a.size();
  const auto choice = find_prime(a);
  tr.l = choice.l;
  tr.p = choice.prime;
  tr.k = (tr.p - 2) / 3;
  tr.prime_bound = choice.bound;
  tr.bound_satisfied = choice.bound_satisfied;
  tr.weights = residue_weights(a, tr.p);
  for (const auto& [r, c] : tr.weights) tr.total_weight += c;
  if (tr.total_weight != tr.n)
    throw Error(ErrorCode::kInternal, "residue weights do not sum to |A|");
  tr.t = find_dilator(tr.weights, tr.p);
  tr.t_inverse = mod_inverse(tr.t, tr.p);
  if ((tr.t * tr.t_inverse) % tr.p != 1) throw Error(ErrorCode::kInternal, "bad modular inverse");

  const auto b = kolountzakis_B(tr.p);
  std::vector<bool> in_s_prime(tr.p, false);
  for (auto r : b.labels()) {
    const auto x = (tr.t_inverse * static_cast<std::uint64_t>(r)) % tr.p;
    in_s_prime[x] = true;
    tr.s_prime.push_back(x);
  }
  std::sort(tr.s_prime.begin(), tr.s_prime.end());
  for (auto x : a)
    if (in_s_prime[x % tr.p]) tr.result.push_back(x);
  std::sort(tr.result.begin(), tr.result.end());
  return tr;
}

}  // namespace sumfree
