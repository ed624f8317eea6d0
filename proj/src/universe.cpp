#include "sumfree/universe.hpp"

#include <functional>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

// Dense addition tables are kept for groups up to this order.
constexpr std::uint64_t kTableOrder = 128;

}  // namespace

struct Universe::Impl {
  Kind kind = Kind::kInterval;
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  GroupSpec group;
  // Element-index addition table (order x order) for small groups.
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> neg_table;

  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const {
    if (!add_table.empty()) return add_table[a * group.order() + b];
    return sumfree::add(group, {a}, {b}).index;
  }
  std::uint64_t neg_index(std::uint64_t a) const {
    if (!neg_table.empty()) return neg_table[a];
    return sumfree::neg(group, {a}).index;
  }
};

Universe Universe::interval(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo)
    throw Error(ErrorCode::kInvalidArgument, "interval universe needs 1 <= lo <= hi, got [" +
                                                 std::to_string(lo) + "," + std::to_string(hi) +
                                                 "]");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kInterval;
  impl->lo = lo;
  impl->hi = hi;
  return Universe(std::move(impl));
}

Universe Universe::group(const GroupSpec& g) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kGroup;
  impl->group = g;
  const auto n = g.order();
  if (n <= kTableOrder) {
    impl->add_table.resize(n * n);
    impl->neg_table.resize(n);
    for (std::uint64_t a = 0; a < n; ++a) {
      impl->neg_table[a] = static_cast<std::uint32_t>(neg(g, {a}).index);
      for (std::uint64_t b = 0; b < n; ++b)
        impl->add_table[a * n + b] = static_cast<std::uint32_t>(add(g, {a}, {b}).index);
    }
  }
  return Universe(std::move(impl));
}

Universe::Kind Universe::kind() const noexcept { return impl_->kind; }
std::int64_t Universe::lo() const noexcept { return impl_->lo; }
std::int64_t Universe::hi() const noexcept { return impl_->hi; }
const GroupSpec& Universe::group_spec() const noexcept { return impl_->group; }

std::size_t Universe::ground_size() const noexcept {
  if (impl_->kind == Kind::kInterval) return static_cast<std::size_t>(impl_->hi - impl_->lo + 1);
  return static_cast<std::size_t>(impl_->group.order() - 1);
}

std::int64_t Universe::label(std::size_t ground) const noexcept {
  if (impl_->kind == Kind::kInterval) return impl_->lo + static_cast<std::int64_t>(ground);
  return static_cast<std::int64_t>(ground) + 1;
}

std::optional<std::size_t> Universe::ground_of(std::int64_t label) const noexcept {
  if (impl_->kind == Kind::kInterval) {
    if (label < impl_->lo || label > impl_->hi) return std::nullopt;
    return static_cast<std::size_t>(label - impl_->lo);
  }
  if (label < 1 || static_cast<std::uint64_t>(label) >= impl_->group.order()) return std::nullopt;
  return static_cast<std::size_t>(label - 1);
}

std::optional<std::size_t> Universe::sum(std::size_t i, std::size_t j) const noexcept {
  if (impl_->kind == Kind::kInterval) {
    // (lo + i) + (lo + j) - lo
    auto g = impl_->lo + static_cast<std::int64_t>(i + j);
    if (g > impl_->hi - impl_->lo) return std::nullopt;
    return static_cast<std::size_t>(g);
  }
  auto s = impl_->add_index(i + 1, j + 1);
  if (s == 0) return std::nullopt;
  return static_cast<std::size_t>(s - 1);
}

std::optional<std::size_t> Universe::diff(std::size_t i, std::size_t j) const noexcept {
  if (impl_->kind == Kind::kInterval) {
    auto d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
    if (d < impl_->lo) return std::nullopt;
    return static_cast<std::size_t>(d - impl_->lo);
  }
  auto s = impl_->add_index(i + 1, impl_->neg_index(j + 1));
  if (s == 0) return std::nullopt;
  return static_cast<std::size_t>(s - 1);
}

std::string Universe::describe() const {
  if (impl_->kind == Kind::kInterval)
    return "[" + std::to_string(impl_->lo) + "," + std::to_string(impl_->hi) + "]";
  return impl_->group.label();
}

bool operator==(const Universe& a, const Universe& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_interval()) return a.lo() == b.lo() && a.hi() == b.hi();
  return a.group_spec() == b.group_spec();
}

ElemSet::ElemSet(Universe u, Bitset bits) : universe_(std::move(u)), bits_(std::move(bits)) {
  if (bits_.size() != universe_.ground_size())
    throw Error(ErrorCode::kMismatch, "bit array size does not match universe " +
                                          universe_.describe());
  cardinality_ = bits_.count();
}

ElemSet ElemSet::from_labels(const Universe& u, std::span<const std::int64_t> labels) {
  ElemSet s(u);
  for (auto l : labels) s.insert(l);
  return s;
}

bool ElemSet::contains(std::int64_t label) const noexcept {
  auto g = universe_.ground_of(label);
  return g && bits_.test(*g);
}

void ElemSet::insert(std::int64_t label) {
  auto g = universe_.ground_of(label);
  if (!g)
    throw Error(ErrorCode::kInvalidElement, std::to_string(label) + " is not in the ground set of " +
                                                universe_.describe());
  insert_ground(*g);
}

void ElemSet::insert_ground(std::size_t i) {
  if (!bits_.test(i)) {
    bits_.set(i);
    ++cardinality_;
  }
}

void ElemSet::erase_ground(std::size_t i) {
  if (bits_.test(i)) {
    bits_.reset(i);
    --cardinality_;
  }
}

std::vector<std::int64_t> ElemSet::labels() const {
  std::vector<std::int64_t> out;
  for (auto i : bits_.indices()) out.push_back(universe_.label(i));
  return out;
}

namespace {

void require_same(const Universe& u, const ElemSet& s) {
  if (!(s.universe() == u))
    throw Error(ErrorCode::kMismatch, "set over " + s.universe().describe() +
                                          " used with universe " + u.describe());
}

}  // namespace

ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  require_same(a.universe(), b);
  return ElemSet(a.universe(), a.bits() & b.bits());
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  require_same(a.universe(), b);
  return ElemSet(a.universe(), a.bits() | b.bits());
}

bool is_sum_free(const Universe& u, const ElemSet& s) { return count_schur_triples(u, s) == 0; }

bool is_a_free(const Universe& u, const ElemSet& s, const ElemSet& a) {
  require_same(u, s);
  require_same(u, a);
  const auto xs = s.ground_indices();
  const auto as = a.ground_indices();
  for (auto x : xs)
    for (auto y : as) {
      auto z = u.sum(x, y);
      if (z && s.contains_ground(*z)) return false;
    }
  return true;
}

bool is_difference_free(const Universe& u, const ElemSet& s) {
  require_same(u, s);
  const auto xs = s.ground_indices();
  for (auto b : xs)
    for (auto c : xs) {
      auto d = u.diff(b, c);
      if (d && s.contains_ground(*d)) return false;
    }
  return true;
}

std::uint64_t count_schur_triples(const Universe& u, const ElemSet& s) {
  require_same(u, s);
  const auto xs = s.ground_indices();
  std::uint64_t count = 0;
  for (auto a : xs)
    for (auto b : xs) {
      auto c = u.sum(a, b);
      if (c && s.contains_ground(*c)) ++count;
    }
  return count;
}

bool is_maximal_sum_free(const Universe& u, const ElemSet& s) {
  if (!is_sum_free(u, s)) return false;
  ElemSet grown = s;
  for (std::size_t g = 0; g < u.ground_size(); ++g) {
    if (s.contains_ground(g)) continue;
    grown.insert_ground(g);
    bool still_free = is_sum_free(u, grown);
    grown.erase_ground(g);
    if (still_free) return false;
  }
  return true;
}

namespace {

// Whether part + {x} stays sum-free, given part is sum-free and x is not in it.
bool can_join(const Universe& u, const ElemSet& part, std::size_t x) {
  auto hits = [&](std::optional<std::size_t> z) {
    return z && (*z == x || part.contains_ground(*z));
  };
  if (hits(u.sum(x, x))) return false;
  for (auto y : part.ground_indices()) {
    if (hits(u.sum(x, y))) return false;
    auto d = u.diff(x, y);  // y + d = x
    if (d && part.contains_ground(*d)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<ElemSet, ElemSet>> two_sum_free_partition(const Universe& u,
                                                                  const ElemSet& s) {
  require_same(u, s);
  const auto xs = s.ground_indices();
  ElemSet parts[2] = {ElemSet(u), ElemSet(u)};
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == xs.size()) return true;
    // The first element goes to part 0 to break the colour symmetry.
    const int colours = k == 0 ? 1 : 2;
    for (int c = 0; c < colours; ++c) {
      if (!can_join(u, parts[c], xs[k])) continue;
      parts[c].insert_ground(xs[k]);
      if (place(k + 1)) return true;
      parts[c].erase_ground(xs[k]);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return std::make_pair(std::move(parts[0]), std::move(parts[1]));
}

bool is_2wise_sum_free(const Universe& u, const ElemSet& s) {
  return two_sum_free_partition(u, s).has_value();
}

}  // namespace sumfree
