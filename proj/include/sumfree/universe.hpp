#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumfree/bitset.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

// Ambient addition structure. An interval [lo, hi] has ground set
// {lo, ..., hi} under integer addition; a group universe has ground set
// G \ {e}. Elements are handled through ground indices 0..ground_size()-1
// and exposed to callers as labels: the integer itself for intervals and
// the canonical element index for groups.
//
// Universe is a cheap handle onto shared immutable state.
class Universe {
 public:
  enum class Kind { kInterval, kGroup };

  static Universe interval(std::int64_t lo, std::int64_t hi);
  static Universe group(const GroupSpec& g);

  Kind kind() const noexcept;
  bool is_interval() const noexcept { return kind() == Kind::kInterval; }
  std::int64_t lo() const noexcept;
  std::int64_t hi() const noexcept;
  const GroupSpec& group_spec() const noexcept;
  std::size_t ground_size() const noexcept;

  std::int64_t label(std::size_t ground) const noexcept;
  std::optional<std::size_t> ground_of(std::int64_t label) const noexcept;

  // Ground index of x_i + x_j, or nullopt when the sum falls outside the
  // ground set (past hi, or onto the group identity).
  std::optional<std::size_t> sum(std::size_t i, std::size_t j) const noexcept;
  // Ground index of x_i - x_j, same convention.
  std::optional<std::size_t> diff(std::size_t i, std::size_t j) const noexcept;

  // "[1,4]" or "C2xC2".
  std::string describe() const;

  friend bool operator==(const Universe& a, const Universe& b);

 private:
  struct Impl;
  explicit Universe(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class ElemSet {
 public:
  explicit ElemSet(Universe u) : universe_(std::move(u)), bits_(universe_.ground_size()) {}
  ElemSet(Universe u, Bitset bits);

  // Throws kInvalidElement for labels outside the ground set.
  static ElemSet from_labels(const Universe& u, std::span<const std::int64_t> labels);

  const Universe& universe() const noexcept { return universe_; }
  const Bitset& bits() const noexcept { return bits_; }
  std::size_t cardinality() const noexcept { return cardinality_; }
  bool empty() const noexcept { return cardinality_ == 0; }

  bool contains(std::int64_t label) const noexcept;
  bool contains_ground(std::size_t i) const noexcept { return bits_.test(i); }
  void insert(std::int64_t label);
  void insert_ground(std::size_t i);
  void erase_ground(std::size_t i);

  std::vector<std::size_t> ground_indices() const { return bits_.indices(); }
  // Sorted ascending.
  std::vector<std::int64_t> labels() const;

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  Universe universe_;
  Bitset bits_;
  std::size_t cardinality_ = 0;
};

ElemSet set_intersection(const ElemSet& a, const ElemSet& b);
ElemSet set_union(const ElemSet& a, const ElemSet& b);

// x = y is allowed: {1, 2} fails because 1 + 1 = 2.
bool is_sum_free(const Universe& u, const ElemSet& s);
// (S + A) and S are disjoint.
bool is_a_free(const Universe& u, const ElemSet& s, const ElemSet& a);
// S and S - S are disjoint; checked through differences only.
bool is_difference_free(const Universe& u, const ElemSet& s);
// Ordered pairs (a, b) in S x S with a + b in S.
std::uint64_t count_schur_triples(const Universe& u, const ElemSet& s);
bool is_maximal_sum_free(const Universe& u, const ElemSet& s);

// Partition of s into two sum-free parts (either may be empty), or nullopt.
std::optional<std::pair<ElemSet, ElemSet>> two_sum_free_partition(const Universe& u,
                                                                  const ElemSet& s);
bool is_2wise_sum_free(const Universe& u, const ElemSet& s);

}  // namespace sumfree
