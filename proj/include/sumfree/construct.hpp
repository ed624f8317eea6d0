#pragma once

#include <cstdint>
#include <vector>

#include "sumfree/group.hpp"
#include "sumfree/universe.hpp"

namespace sumfree {

// Odd integers of [1, n].
ElemSet odds(std::int64_t n);

// The interval sum-free sets of size ceil(n/2) in [1, n]: [(n+1)/2, n] for
// odd n; [n/2, n-1] and [n/2+1, n] for even n.
std::vector<ElemSet> extremal_intervals(std::int64_t n);

// {x in Z_n : n/3 < x <= 2n/3}, representatives 1..n-1.
ElemSet middle_third_A1(std::uint64_t n);

// {x in Z_n : n/6 < x <= n/3 or 2n/3 < x <= n} with the representative n
// (the identity) dropped. Not sum-free in general: n = 12 gives 10+11 = 9.
ElemSet middle_third_A2(std::uint64_t n);

// h + g over the universe of h's parent group; g must lie outside h and h
// must be proper.
ElemSet coset(const Subgroup& h, Element g);

// {x in [1, window_hi] : x = m (mod n)} for 0 < m < n.
ElemSet periodic_residues(std::int64_t m, std::int64_t n, std::int64_t window_hi);

// Every x in [1, window_hi] whose residue mod n lies in a, where a is a
// sum-free subset of the cyclic group Z_n.
ElemSet lift_mod_sumfree(const ElemSet& a, std::int64_t window_hi);

// {k+1, ..., 2k+1} in Z_p for a prime p = 3k + 2.
ElemSet kolountzakis_B(std::uint64_t p);

}  // namespace sumfree
