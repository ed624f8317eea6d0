#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/universe.hpp"

namespace sumfree {

// Hard cap for the binary-counter reference enumerator.
inline constexpr std::size_t kMaxNaiveGround = 25;
// Default ground-set cap for the backtracking enumerators.
inline constexpr std::size_t kDefaultSearchGround = 64;
inline constexpr std::int64_t kMax2wiseN = 18;

using SetVisitor = std::function<void(const ElemSet&)>;

// Walks all 2^N subsets with a binary counter and checks each one pair by
// pair. Reference oracle only. The empty set is counted.
std::uint64_t enumerate_naive(const Universe& u, const SetVisitor& visit = {});

// Backtracking over ground indices in ascending order, descending only
// while the current set stays sum-free. Each sum-free set (empty set
// included) is visited exactly once.
std::uint64_t count_sum_free(const Universe& u, std::size_t max_ground = kDefaultSearchGround);
std::uint64_t enumerate_sum_free(const Universe& u, const SetVisitor& visit,
                                 std::size_t max_ground = kDefaultSearchGround);

// Subtree count for one shard. The low log2(shard_count) bits of
// shard_index fix inclusion of ground elements 0, 1, ...; shard_count must
// be a power of two. Partials over all shards sum to count_sum_free.
std::uint64_t count_sum_free_sharded(const Universe& u, std::uint64_t shard_index,
                                     std::uint64_t shard_count,
                                     std::size_t max_ground = kDefaultSearchGround);
// Runs every shard on its own task and sums the partials.
std::uint64_t count_sum_free_parallel(const Universe& u, std::uint64_t shard_count,
                                      std::size_t max_ground = kDefaultSearchGround);

// All sum-free sets of maximum cardinality, sorted by their label lists.
std::vector<ElemSet> enumerate_maximum(const Universe& u,
                                       std::size_t max_ground = kDefaultSearchGround);
// All maximal sum-free sets, sorted by their label lists.
std::vector<ElemSet> enumerate_maximal(const Universe& u,
                                       std::size_t max_ground = kDefaultSearchGround);
std::uint64_t count_maximal(const Universe& u, std::size_t max_ground = kDefaultSearchGround);

// m -> number of sum-free sets of cardinality m, for m = 0..max cardinality.
std::map<std::size_t, std::uint64_t> count_by_cardinality(
    const Universe& u, std::size_t max_ground = kDefaultSearchGround);

// Number of subsets of [1, n] that split into two sum-free parts.
std::uint64_t count_2wise(std::int64_t n);

struct CountOptions {
  bool maximal = false;
  bool by_cardinality = false;
  bool two_wise = false;
  std::uint64_t shard_count = 1;
  std::size_t max_ground = kDefaultSearchGround;
};

// One row of a counting experiment. Interval-only fields are empty for
// group universes.
struct CountRecord {
  std::string universe;
  std::size_t ground_size = 0;
  std::uint64_t f = 0;
  std::optional<std::uint64_t> f_max;
  std::optional<std::uint64_t> f_odd;       // 2^ceil(n/2), intervals [1,n]
  std::optional<std::uint64_t> f_interval;  // f(ceil(n/3), n), intervals [1,n]
  std::optional<std::uint64_t> f_2wise;     // intervals [1,n]
  std::map<std::size_t, std::uint64_t> f_by_cardinality;
  // f / 2^(n/2) with n the ground-set size for intervals and |G| for groups.
  double ratio_half = 0;
};

CountRecord count_record(const Universe& u, const CountOptions& opts = {});

}  // namespace sumfree
