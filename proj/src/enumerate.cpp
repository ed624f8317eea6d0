#include "sumfree/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

constexpr std::int32_t kNone = -1;

void check_cap(const Universe& u, std::size_t max_ground) {
  if (u.ground_size() > max_ground)
    throw Error(ErrorCode::kCapacity, "ground set of " + u.describe() + " has " +
                                          std::to_string(u.ground_size()) +
                                          " elements; search cap is " +
                                          std::to_string(max_ground));
}

// Precomputed sum/difference structure of a universe plus the per-level
// word arrays used by the search. A node holds the chosen set S and its
// forbidden set F = (S+S) u (S-S) u {z : 2z in S}; for sum-free S, an
// element z outside S can join iff z is not in F.
class SearchEngine {
 public:
  explicit SearchEngine(const Universe& u)
      : n_(u.ground_size()), words_((n_ + 63) / 64 == 0 ? 1 : (n_ + 63) / 64) {
    sum_.assign(n_ * n_, kNone);
    diff_.assign(n_ * n_, kNone);
    halves_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (auto s = u.sum(i, j)) sum_[i * n_ + j] = static_cast<std::int32_t>(*s);
        if (auto d = u.diff(i, j)) diff_[i * n_ + j] = static_cast<std::int32_t>(*d);
      }
    for (std::size_t z = 0; z < n_; ++z)
      if (auto s = sum_[z * n_ + z]; s != kNone) set_bit(&halves_[s * words_], z);
    stack_.assign((n_ + 2) * 2 * words_, 0);
    members_.resize(n_ + 1);
    all_.assign(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) set_bit(all_.data(), i);
  }

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  std::uint64_t* set_at(std::size_t depth) { return &stack_[depth * 2 * words_]; }
  std::uint64_t* forbidden_at(std::size_t depth) { return &stack_[depth * 2 * words_ + words_]; }
  const std::vector<std::size_t>& members() const { return members_; }

  static bool test_bit(const std::uint64_t* w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }
  static void set_bit(std::uint64_t* w, std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

  // Writes level depth+1 as level depth plus element x. Returns false if x
  // cannot join.
  bool extend(std::size_t depth, std::size_t x) {
    const auto* s = set_at(depth);
    const auto* f = forbidden_at(depth);
    if (test_bit(f, x) || test_bit(s, x)) return false;
    auto* s2 = set_at(depth + 1);
    auto* f2 = forbidden_at(depth + 1);
    std::copy(s, s + words_, s2);
    std::copy(f, f + words_, f2);
    set_bit(s2, x);
    members_[depth] = x;
    const auto* half = &halves_[x * words_];
    for (std::size_t w = 0; w < words_; ++w) f2[w] |= half[w];
    for (std::size_t k = 0; k <= depth; ++k) {
      const auto y = members_[k];
      if (auto v = sum_[x * n_ + y]; v != kNone) set_bit(f2, static_cast<std::size_t>(v));
      if (auto v = diff_[x * n_ + y]; v != kNone) set_bit(f2, static_cast<std::size_t>(v));
      if (auto v = diff_[y * n_ + x]; v != kNone) set_bit(f2, static_cast<std::size_t>(v));
    }
    return true;
  }

  void clear_root() {
    std::fill(set_at(0), set_at(0) + 2 * words_, 0);
  }

  // Candidates with index >= from that can still join.
  std::size_t open_from(std::size_t depth, std::size_t from) const {
    const auto* s = &stack_[depth * 2 * words_];
    const auto* f = s + words_;
    std::size_t c = 0;
    for (std::size_t w = from >> 6; w < words_; ++w) {
      auto open = all_[w] & ~f[w] & ~s[w];
      if (w == (from >> 6) && (from & 63)) open &= ~std::uint64_t{0} << (from & 63);
      c += static_cast<std::size_t>(std::popcount(open));
    }
    return c;
  }

  bool is_maximal(std::size_t depth) const {
    const auto* s = &stack_[depth * 2 * words_];
    const auto* f = s + words_;
    for (std::size_t w = 0; w < words_; ++w)
      if ((s[w] | f[w]) != all_[w]) return false;
    return true;
  }

  ElemSet materialize(const Universe& u, std::size_t depth) const {
    ElemSet e(u);
    for (std::size_t k = 0; k < depth; ++k) e.insert_ground(members_[k]);
    return e;
  }

  // Depth-first walk from level depth; children add indices >= from.
  // visit(depth) returns false to prune the subtree below that node.
  template <typename Visit>
  void walk(std::size_t depth, std::size_t from, Visit& visit) {
    if (!visit(depth, from)) return;
    for (std::size_t x = from; x < n_; ++x)
      if (extend(depth, x)) walk(depth + 1, x + 1, visit);
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::int32_t> sum_;
  std::vector<std::int32_t> diff_;
  std::vector<std::uint64_t> halves_;
  std::vector<std::uint64_t> stack_;
  std::vector<std::size_t> members_;
  std::vector<std::uint64_t> all_;
};

bool set_label_less(const ElemSet& a, const ElemSet& b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

}  // namespace

std::uint64_t enumerate_naive(const Universe& u, const SetVisitor& visit) {
  const auto n = u.ground_size();
  if (n > kMaxNaiveGround)
    throw Error(ErrorCode::kCapacity, "naive enumeration is capped at " +
                                          std::to_string(kMaxNaiveGround) + " ground elements");
  std::uint64_t count = 0;
  std::vector<std::size_t> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    members.clear();
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) members.push_back(i);
    bool free = true;
    for (std::size_t a = 0; a < members.size() && free; ++a)
      for (std::size_t b = 0; b < members.size() && free; ++b) {
        auto c = u.sum(members[a], members[b]);
        if (c && ((mask >> *c) & 1u)) free = false;
      }
    if (!free) continue;
    ++count;
    if (visit) {
      ElemSet s(u);
      for (auto i : members) s.insert_ground(i);
      visit(s);
    }
  }
  return count;
}

std::uint64_t count_sum_free(const Universe& u, std::size_t max_ground) {
  return count_sum_free_sharded(u, 0, 1, max_ground);
}

std::uint64_t enumerate_sum_free(const Universe& u, const SetVisitor& visit,
                                 std::size_t max_ground) {
  check_cap(u, max_ground);
  SearchEngine eng(u);
  eng.clear_root();
  std::uint64_t count = 0;
  auto on_node = [&](std::size_t depth, std::size_t) {
    ++count;
    if (visit) visit(eng.materialize(u, depth));
    return true;
  };
  eng.walk(0, 0, on_node);
  return count;
}

std::uint64_t count_sum_free_sharded(const Universe& u, std::uint64_t shard_index,
                                     std::uint64_t shard_count, std::size_t max_ground) {
  if (shard_count == 0 || !std::has_single_bit(shard_count) || shard_index >= shard_count)
    throw Error(ErrorCode::kInvalidShard, "shard " + std::to_string(shard_index) + " of " +
                                              std::to_string(shard_count) +
                                              " is invalid; shard_count must be a power of two");
  check_cap(u, max_ground);
  SearchEngine eng(u);
  eng.clear_root();
  const auto fixed = static_cast<std::size_t>(std::countr_zero(shard_count));
  std::size_t depth = 0;
  for (std::size_t i = 0; i < fixed; ++i) {
    if (!((shard_index >> i) & 1u)) continue;
    if (i >= eng.size() || !eng.extend(depth, i)) return 0;
    ++depth;
  }
  std::uint64_t count = 0;
  auto on_node = [&](std::size_t, std::size_t) {
    ++count;
    return true;
  };
  eng.walk(depth, std::min(fixed, eng.size()), on_node);
  return count;
}

std::uint64_t count_sum_free_parallel(const Universe& u, std::uint64_t shard_count,
                                      std::size_t max_ground) {
  if (shard_count <= 1) return count_sum_free(u, max_ground);
  std::vector<std::future<std::uint64_t>> parts;
  for (std::uint64_t s = 0; s < shard_count; ++s)
    parts.push_back(std::async(std::launch::async, [&u, s, shard_count, max_ground] {
      return count_sum_free_sharded(u, s, shard_count, max_ground);
    }));
  std::uint64_t total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

std::vector<ElemSet> enumerate_maximum(const Universe& u, std::size_t max_ground) {
  check_cap(u, max_ground);
  SearchEngine eng(u);
  eng.clear_root();
  std::size_t best = 0;
  std::vector<ElemSet> found;
  auto on_node = [&](std::size_t depth, std::size_t from) {
    if (depth + eng.open_from(depth, from) < best) return false;
    if (depth > best) {
      best = depth;
      found.clear();
    }
    if (depth == best) found.push_back(eng.materialize(u, depth));
    return true;
  };
  eng.walk(0, 0, on_node);
  std::sort(found.begin(), found.end(), set_label_less);
  return found;
}

std::vector<ElemSet> enumerate_maximal(const Universe& u, std::size_t max_ground) {
  check_cap(u, max_ground);
  SearchEngine eng(u);
  eng.clear_root();
  std::vector<ElemSet> found;
  auto on_node = [&](std::size_t depth, std::size_t) {
    if (eng.is_maximal(depth)) found.push_back(eng.materialize(u, depth));
    return true;
  };
  eng.walk(0, 0, on_node);
  std::sort(found.begin(), found.end(), set_label_less);
  return found;
}

std::uint64_t count_maximal(const Universe& u, std::size_t max_ground) {
  check_cap(u, max_ground);
  SearchEngine eng(u);
  eng.clear_root();
  std::uint64_t count = 0;
  auto on_node = [&](std::size_t depth, std::size_t) {
    if (eng.is_maximal(depth)) ++count;
    return true;
  };
  eng.walk(0, 0, on_node);
  return count;
}

std::map<std::size_t, std::uint64_t> count_by_cardinality(const Universe& u,
                                                          std::size_t max_ground) {
  check_cap(u, max_ground);
  SearchEngine eng(u);
  eng.clear_root();
  std::map<std::size_t, std::uint64_t> hist;
  auto on_node = [&](std::size_t depth, std::size_t) {
    ++hist[depth];
    return true;
  };
  eng.walk(0, 0, on_node);
  return hist;
}

std::uint64_t count_2wise(std::int64_t n) {
  if (n < 1 || n > kMax2wiseN)
    throw Error(ErrorCode::kCapacity, "count_2wise supports 1 <= n <= " + std::to_string(kMax2wiseN));
  auto u = Universe::interval(1, n);
  // The family is closed under subsets, so extend only 2-wise sets.
  std::uint64_t count = 0;
  ElemSet s(u);
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    ++count;
    for (auto x = from; x < u.ground_size(); ++x) {
      s.insert_ground(x);
      if (is_2wise_sum_free(u, s)) grow(x + 1);
      s.erase_ground(x);
    }
  };
  grow(0);
  return count;
}

CountRecord count_record(const Universe& u, const CountOptions& opts) {
  CountRecord r;
  r.universe = u.describe();
  r.ground_size = u.ground_size();
  r.f = count_sum_free_parallel(u, opts.shard_count, opts.max_ground);
  if (opts.maximal) r.f_max = count_maximal(u, opts.max_ground);
  if (opts.by_cardinality) r.f_by_cardinality = count_by_cardinality(u, opts.max_ground);
  const double n = u.is_interval() ? static_cast<double>(u.ground_size())
                                   : static_cast<double>(u.group_spec().order());
  r.ratio_half = static_cast<double>(r.f) / std::pow(2.0, n / 2);
  if (u.is_interval() && u.lo() == 1) {
    const auto hi = u.hi();
    r.f_odd = std::uint64_t{1} << ((hi + 1) / 2);
    r.f_interval = count_sum_free(Universe::interval((hi + 2) / 3, hi), opts.max_ground);
    if (opts.two_wise) r.f_2wise = count_2wise(hi);
  }
  return r;
}

}  // namespace sumfree
