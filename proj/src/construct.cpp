#include "sumfree/construct.hpp"

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be at least 1");
}

Universe cyclic(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "cyclic group order must be at least 2");
  return Universe::group(make_group({n}));
}

ElemSet interval_set(const Universe& u, std::int64_t from, std::int64_t to) {
  ElemSet s(u);
  for (auto x = from; x <= to; ++x) s.insert(x);
  return s;
}

}  // namespace

ElemSet odds(std::int64_t n) {
  require_positive(n, "n");
  auto u = Universe::interval(1, n);
  ElemSet s(u);
  for (std::int64_t x = 1; x <= n; x += 2) s.insert(x);
  return s;
}

std::vector<ElemSet> extremal_intervals(std::int64_t n) {
  require_positive(n, "n");
  auto u = Universe::interval(1, n);
  if (n % 2) return {interval_set(u, (n + 1) / 2, n)};
  return {interval_set(u, n / 2, n - 1), interval_set(u, n / 2 + 1, n)};
}

ElemSet middle_third_A1(std::uint64_t n) {
  auto u = cyclic(n);
  ElemSet s(u);
  // n/3 < x <= 2n/3  <=>  n < 3x <= 2n
  for (std::uint64_t x = 1; x < n; ++x)
    if (n < 3 * x && 3 * x <= 2 * n) s.insert(static_cast<std::int64_t>(x));
  return s;
}

ElemSet middle_third_A2(std::uint64_t n) {
  auto u = cyclic(n);
  ElemSet s(u);
  // n/6 < x <= n/3  <=>  n < 6x <= 2n;  2n/3 < x  <=>  2n < 3x
  for (std::uint64_t x = 1; x < n; ++x)
    if ((n < 6 * x && 6 * x <= 2 * n) || 2 * n < 3 * x) s.insert(static_cast<std::int64_t>(x));
  return s;
}

ElemSet coset(const Subgroup& h, Element g) {
  const auto& grp = h.parent();
  if (!grp.contains(g)) throw Error(ErrorCode::kInvalidElement, "coset translate out of range");
  if (h.size() == grp.order())
    throw Error(ErrorCode::kPrecondition, "coset needs a proper subgroup");
  if (h.contains(g))
    throw Error(ErrorCode::kPrecondition, "translate lies in the subgroup: not a nontrivial coset");
  auto u = Universe::group(grp);
  ElemSet s(u);
  for (auto x : h.elements()) s.insert(static_cast<std::int64_t>(add(grp, x, g).index));
  return s;
}

ElemSet periodic_residues(std::int64_t m, std::int64_t n, std::int64_t window_hi) {
  if (m <= 0 || m >= n)
    throw Error(ErrorCode::kInvalidArgument, "periodic residues need 0 < m < n");
  require_positive(window_hi, "window_hi");
  auto u = Universe::interval(1, window_hi);
  ElemSet s(u);
  for (auto x = m; x <= window_hi; x += n) s.insert(x);
  return s;
}

ElemSet lift_mod_sumfree(const ElemSet& a, std::int64_t window_hi) {
  const auto& ua = a.universe();
  if (ua.is_interval() || ua.group_spec().moduli().size() != 1)
    throw Error(ErrorCode::kMismatch, "lift expects a subset of a cyclic group Z_n");
  if (!is_sum_free(ua, a))
    throw Error(ErrorCode::kPrecondition, "residue set is not sum-free in " + ua.describe());
  require_positive(window_hi, "window_hi");
  const auto n = static_cast<std::int64_t>(ua.group_spec().order());
  auto u = Universe::interval(1, window_hi);
  ElemSet s(u);
  for (std::int64_t x = 1; x <= window_hi; ++x)
    if (a.contains(x % n)) s.insert(x);
  return s;
}

ElemSet kolountzakis_B(std::uint64_t p) {
  if (!is_prime(p) || p % 3 != 2)
    throw Error(ErrorCode::kInvalidPrime, std::to_string(p) + " is not a prime congruent to 2 mod 3");
  const auto k = (p - 2) / 3;
  auto u = cyclic(p);
  ElemSet s(u);
  for (auto x = k + 1; x <= 2 * k + 1; ++x) s.insert(static_cast<std::int64_t>(x));
  return s;
}

}  // namespace sumfree
