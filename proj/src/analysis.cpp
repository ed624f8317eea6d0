#include "sumfree/analysis.hpp"

#include <algorithm>
#include <set>

#include "sumfree/construct.hpp"
#include "sumfree/error.hpp"

namespace sumfree {

DensityFormula v_of(const GroupSpec& g) {
  const auto n = g.order();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "v is undefined for the trivial group");
  const auto primes = factorize(n);
  for (auto [p, e] : primes)
    if (p % 3 == 2) {
      const auto p3 = static_cast<std::int64_t>(3 * p);
      return {Rational(1, 3) + Rational(1, p3), 1};
    }
  if (n % 3 == 0) return {Rational(1, 3), 2};
  const auto m = static_cast<std::int64_t>(exponent(g));
  return {Rational(1, 3) - Rational(1, 3 * m), 3};
}

DensityReport mu_of(const GroupSpec& g, std::size_t max_ground) {
  const auto formula = v_of(g);
  auto u = Universe::group(g);
  auto maximum = enumerate_maximum(u, max_ground);
  const auto card = maximum.front().cardinality();
  DensityReport r{g, Rational(static_cast<std::int64_t>(card), static_cast<std::int64_t>(g.order())),
                  maximum.front(), card, formula.v, formula.v_case, false};
  r.agree = r.mu == r.v;
  return r;
}

Index2Report index2_report(const GroupSpec& g, std::size_t max_ground) {
  if (g.order() % 2)
    throw Error(ErrorCode::kNotApplicable, g.label() + " has odd order; no index-2 subgroups");
  auto u = Universe::group(g);
  const auto half = g.order() / 2;
  const auto maximum = enumerate_maximum(u, max_ground);
  Index2Report r;
  r.max_cardinality = maximum.front().cardinality();
  if (r.max_cardinality > half)
    throw Error(ErrorCode::kInternal, "sum-free set larger than |G|/2 in " + g.label());

  std::set<std::vector<std::int64_t>> half_sets;
  if (r.max_cardinality == half)
    for (const auto& s : maximum) half_sets.insert(s.labels());
  r.half_size_sets = half_sets.size();

  const auto subgroups = index2_subgroups(g);
  r.index2_subgroups = subgroups.size();
  std::set<std::vector<std::int64_t>> cosets;
  for (const auto& h : subgroups) {
    // Coset floor: some translate of h is sum-free and has |G|/|G:H| elements.
    if (r.max_cardinality * 2 < g.order())
      throw Error(ErrorCode::kInternal, "coset lower bound violated in " + g.label());
    std::vector<std::int64_t> complement;
    for (std::uint64_t x = 1; x < g.order(); ++x)
      if (!h.contains({x})) complement.push_back(static_cast<std::int64_t>(x));
    cosets.insert(std::move(complement));
  }
  r.equality = half_sets == cosets;
  return r;
}

bool check_index2_equality(const GroupSpec& g, std::size_t max_ground) {
  return index2_report(g, max_ground).equality;
}

bool babai_sos_floor(const GroupSpec& g, std::size_t max_ground) {
  if (g.order() < 2) throw Error(ErrorCode::kInvalidArgument, "trivial group");
  const auto q = factorize(g.order()).front().first;
  const auto maximum = enumerate_maximum(Universe::group(g), max_ground);
  return maximum.front().cardinality() * q >= g.order();
}

AkReport ak_report(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "n must be at least 2");
  const auto a1 = middle_third_A1(n);
  const auto a2 = middle_third_A2(n);
  AkReport r;
  r.n = n;
  bool first = true;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto size = static_cast<std::int64_t>(n / d);
    std::int64_t hit1 = 0, hit2 = 0;
    for (auto x = d; x < n; x += d) {
      hit1 += a1.contains(static_cast<std::int64_t>(x));
      hit2 += a2.contains(static_cast<std::int64_t>(x));
    }
    const Rational slack =
        Rational(4, 7) * Rational(hit1, size) + Rational(3, 7) * Rational(hit2, size) - Rational(2, 7);
    r.divisors.push_back({d, slack});
    if (first || slack < r.min_slack) {
      r.min_slack = slack;
      r.min_divisor = d;
      first = false;
    }
    if (slack < Rational(0)) r.holds = false;
  }
  return r;
}

bool ak_inequality(std::uint64_t n) { return ak_report(n).holds; }

FreimanResult freiman_check(const ElemSet& s) {
  const auto& u = s.universe();
  if (!u.is_interval())
    throw Error(ErrorCode::kMismatch, "structure check applies to sets of integers");
  if (!is_sum_free(u, s)) throw Error(ErrorCode::kPrecondition, "set is not sum-free");
  if (s.empty()) return {FreimanVerdict::kVacuous, {}};
  const auto xs = s.labels();
  const auto size = static_cast<std::int64_t>(xs.size());
  const auto k = xs.back();
  // |S| >= 5k/12 + 2  <=>  12|S| >= 5k + 24
  if (12 * size < 5 * k + 24) return {FreimanVerdict::kVacuous, {}};
  const auto odd = std::count_if(xs.begin(), xs.end(), [](auto x) { return x % 2 != 0; });
  if (odd == size) return {FreimanVerdict::kPass, {}};
  if (odd == 0) return {FreimanVerdict::kFail, "(ii) requires both odd and even members"};
  if (xs.front() < size) return {FreimanVerdict::kFail, "(ii) min(S) >= |S|"};
  const auto low = std::count_if(xs.begin(), xs.end(), [k](auto x) { return 2 * x <= k; });
  if (4 * low > k - 2 * size + 3)
    return {FreimanVerdict::kFail, "(ii) |S n [1,k/2]| <= (k-2|S|+3)/4"};
  return {FreimanVerdict::kPass, {}};
}

Rational sapozhenko_ratio(std::int64_t n, std::size_t max_ground) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  const auto f = count_sum_free(Universe::interval(1, n), max_ground);
  const auto upper = count_sum_free(Universe::interval((n + 2) / 3, n), max_ground);
  const auto odd = std::uint64_t{1} << ((n + 1) / 2);
  return Rational(static_cast<std::int64_t>(f), static_cast<std::int64_t>(upper + odd));
}

std::vector<Size1Hit> giudici_size1_scan(std::uint64_t max_order) {
  std::vector<Size1Hit> out;
  for (std::uint64_t n = 2; n <= max_order; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      auto u = Universe::group(g);
      Size1Hit hit{g, {}, true};
      for (std::uint64_t x = 1; x < n; ++x) {
        ElemSet s(u);
        s.insert(static_cast<std::int64_t>(x));
        if (!is_maximal_sum_free(u, s)) continue;
        hit.witnesses.push_back({x});
        if (!is_prime(element_order(g, {x}))) hit.witnesses_prime_order = false;
      }
      if (!hit.witnesses.empty()) out.push_back(std::move(hit));
    }
  return out;
}

std::vector<std::pair<GroupSpec, ElemSet>> giudici_size2_scan(std::uint64_t max_order) {
  std::vector<std::pair<GroupSpec, ElemSet>> out;
  for (std::uint64_t n = 2; n <= max_order; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      auto u = Universe::group(g);
      for (std::uint64_t x = 1; x < n; ++x)
        for (std::uint64_t y = x + 1; y < n; ++y) {
          ElemSet s(u);
          s.insert(static_cast<std::int64_t>(x));
          s.insert(static_cast<std::int64_t>(y));
          if (is_maximal_sum_free(u, s)) out.emplace_back(g, std::move(s));
        }
    }
  return out;
}

LevTerm lev_leading_term(const GroupSpec& g, std::size_t max_ground) {
  if (g.order() % 2)
    throw Error(ErrorCode::kNotApplicable, g.label() + " has odd order");
  const auto v = even_component_count(g);
  LevTerm t;
  t.leading = ((std::uint64_t{1} << v) - 1) << (g.order() / 2);
  t.f = count_sum_free(Universe::group(g), max_ground);
  t.ratio = Rational(static_cast<std::int64_t>(t.f), static_cast<std::int64_t>(t.leading));
  return t;
}

}  // namespace sumfree
