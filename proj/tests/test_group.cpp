#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sumfree/error.hpp"
#include "sumfree/group.hpp"

using namespace sumfree;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST(Group, OrderAndLabel) {
  auto g = make_group({4, 2});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.label(), "C4xC2");
  EXPECT_EQ(GroupSpec{}.label(), "C1");
  EXPECT_EQ(GroupSpec{}.order(), 1u);
}

TEST(Group, RejectsBadModuli) {
  EXPECT_EQ(code_of([] { make_group({0}); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(code_of([] { make_group({1, 3}); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(code_of([] { make_group({1024, 1024, 2}); }), ErrorCode::kCapacity);
  EXPECT_EQ(code_of([] { make_group({6}, 5); }), ErrorCode::kCapacity);
}

TEST(Group, MixedRadixCoordinates) {
  auto g = make_group({3, 4});
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    auto c = g.coords(g.element(i));
    EXPECT_EQ(c[0], i % 3);
    EXPECT_EQ(c[1], i / 3);
    EXPECT_EQ(g.element(c).index, i);
  }
  EXPECT_THROW(g.element(12), Error);
}

TEST(Group, Decomposition) {
  auto g = make_group({12, 2});
  std::vector<PrimePower> want{{2, 1, 2}, {2, 2, 4}, {3, 1, 3}};
  EXPECT_EQ(g.decomposition(), want);
  EXPECT_TRUE(make_group({6}).isomorphic_to(make_group({2, 3})));
  EXPECT_FALSE(make_group({4}).isomorphic_to(make_group({2, 2})));
  EXPECT_EQ(even_component_count(g), 2u);
  EXPECT_EQ(even_component_count(make_group({15})), 0u);
}

TEST(Group, ArithmeticMatchesOracle) {
  for (const auto& mod : std::vector<std::vector<std::uint64_t>>{{6}, {4, 2}, {3, 3, 2}, {5, 4}}) {
    auto g = make_group(mod);
    oracle::Group o{mod};
    for (std::uint64_t a = 0; a < g.order(); ++a) {
      EXPECT_EQ(add(g, Element{a}, neg(g, Element{a})), identity(g));
      for (std::uint64_t b = 0; b < g.order(); ++b) {
        EXPECT_EQ(add(g, Element{a}, Element{b}).index, o.add(a, b));
        EXPECT_EQ(add(g, sub(g, Element{a}, Element{b}), Element{b}).index, a);
      }
    }
  }
}

TEST(Group, ElementOrderAndExponent) {
  auto g = make_group({4, 6});
  std::uint64_t best = 0;
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    auto e = Element{i};
    auto k = element_order(g, e);
    EXPECT_EQ(multiply(g, k, e), identity(g));
    for (std::uint64_t j = 1; j < k; ++j) EXPECT_NE(multiply(g, j, e), identity(g));
    best = std::max(best, k);
  }
  EXPECT_EQ(exponent(g), 12u);
  EXPECT_EQ(best, exponent(g));
}

TEST(Group, Index2SubgroupsOfKlein) {
  auto g = make_group({2, 2});
  auto hs = index2_subgroups(g);
  EXPECT_EQ(hs.size(), 3u);
  for (const auto& h : hs) {
    EXPECT_EQ(h.size(), 2u);
    EXPECT_TRUE(h.contains(identity(g)));
  }
}

TEST(Group, Index2SubgroupOfZ4) {
  auto hs = index2_subgroups(make_group({4}));
  ASSERT_EQ(hs.size(), 1u);
  auto el = hs[0].elements();
  ASSERT_EQ(el.size(), 2u);
  EXPECT_EQ(el[0].index, 0u);
  EXPECT_EQ(el[1].index, 2u);
  EXPECT_TRUE(index2_subgroups(make_group({9})).empty());
}

// Index-2 subgroups against a full lattice walk, orders up to 32.
TEST(Group, Index2CountMatchesLatticeScan) {
  for (std::uint64_t n = 2; n <= 32; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      oracle::Group o{g.moduli()};
      auto lattice = oracle::all_subgroups(o);
      std::set<std::uint64_t> half;
      for (auto m : lattice)
        if (2u * static_cast<unsigned>(__builtin_popcountll(m)) == n) half.insert(m);
      std::set<std::uint64_t> got;
      for (const auto& h : index2_subgroups(g)) {
        std::uint64_t m = 0;
        for (auto i : h.members().indices()) m |= std::uint64_t{1} << i;
        got.insert(m);
      }
      EXPECT_EQ(got, half) << g.label();
      EXPECT_EQ(got.size(), (std::size_t{1} << even_component_count(g)) - 1) << g.label();
    }
  }
}

TEST(Group, MakeSubgroupValidates) {
  auto g = make_group({6});
  Bitset ok(6);
  ok.set(0);
  ok.set(3);
  EXPECT_EQ(make_subgroup(g, ok).size(), 2u);
  Bitset no_identity(6);
  no_identity.set(3);
  EXPECT_EQ(code_of([&] { make_subgroup(g, no_identity); }), ErrorCode::kPrecondition);
  Bitset not_closed(6);
  not_closed.set(0);
  not_closed.set(1);
  EXPECT_EQ(code_of([&] { make_subgroup(g, not_closed); }), ErrorCode::kPrecondition);
}

TEST(Group, GeneratedSubgroup) {
  auto g = make_group({4, 2});
  std::vector<Element> gens{Element{2}};
  auto h = generated_subgroup(g, gens);
  EXPECT_EQ(h.size(), 2u);
  gens.push_back(Element{1});
  EXPECT_EQ(generated_subgroup(g, gens).size(), 4u);
  EXPECT_EQ(generated_subgroup(g, {}).size(), 1u);
}

TEST(Group, AbelianGroupsOfOrder) {
  auto g8 = abelian_groups_of_order(8);
  ASSERT_EQ(g8.size(), 3u);
  EXPECT_EQ(g8[0].moduli(), (std::vector<std::uint64_t>{8}));
  EXPECT_EQ(g8[1].moduli(), (std::vector<std::uint64_t>{4, 2}));
  EXPECT_EQ(g8[2].moduli(), (std::vector<std::uint64_t>{2, 2, 2}));
  EXPECT_EQ(abelian_groups_of_order(16).size(), 5u);
  EXPECT_EQ(abelian_groups_of_order(32).size(), 7u);
  EXPECT_EQ(abelian_groups_of_order(36).size(), 4u);
  EXPECT_EQ(abelian_groups_of_order(1).size(), 1u);
  // No two classes of one order are isomorphic.
  for (std::uint64_t n = 2; n <= 64; ++n) {
    auto gs = abelian_groups_of_order(n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      EXPECT_EQ(gs[i].order(), n);
      for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_FALSE(gs[i].isomorphic_to(gs[j]));
    }
  }
}

TEST(Group, NumberTheory) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1'000'003));
  EXPECT_FALSE(is_prime(1'000'001));
  auto f = factorize(360);
  EXPECT_EQ(f, (std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(gcd(12, 18), 6u);
  EXPECT_EQ(lcm(4, 6), 12u);
}

TEST(Group, RandomMixedRadixRoundTrip) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::vector<std::uint64_t> mod;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) mod.push_back(2 + rng() % 6);
    auto g = make_group(mod);
    const auto a = Element{rng() % g.order()}, b = Element{rng() % g.order()};
    const auto c = Element{rng() % g.order()};
    EXPECT_EQ(add(g, add(g, a, b), c), add(g, a, add(g, b, c)));
    EXPECT_EQ(add(g, a, b), add(g, b, a));
    EXPECT_EQ(g.element(g.coords(a)), a);
  }
}
