#include <gtest/gtest.h>

#include "sumfree/construct.hpp"
#include "sumfree/error.hpp"

using namespace sumfree;

using Labels = std::vector<std::int64_t>;

TEST(Construct, Odds) {
  EXPECT_EQ(odds(5).labels(), (Labels{1, 3, 5}));
  EXPECT_EQ(odds(1).labels(), (Labels{1}));
  EXPECT_EQ(odds(6).cardinality(), 3u);
  EXPECT_THROW(odds(0), Error);
}

TEST(Construct, ExtremalIntervals) {
  auto e7 = extremal_intervals(7);
  ASSERT_EQ(e7.size(), 1u);
  EXPECT_EQ(e7[0].labels(), (Labels{4, 5, 6, 7}));
  auto e6 = extremal_intervals(6);
  ASSERT_EQ(e6.size(), 2u);
  EXPECT_EQ(e6[0].labels(), (Labels{3, 4, 5}));
  EXPECT_EQ(e6[1].labels(), (Labels{4, 5, 6}));
  EXPECT_EQ(extremal_intervals(1)[0].labels(), (Labels{1}));
  EXPECT_THROW(extremal_intervals(-3), Error);
}

TEST(Construct, MiddleThirds) {
  EXPECT_EQ(middle_third_A1(6).labels(), (Labels{3, 4}));
  EXPECT_EQ(middle_third_A1(3).labels(), (Labels{2}));
  auto a6 = middle_third_A2(6);
  EXPECT_EQ(a6.labels(), (Labels{2, 5}));
  EXPECT_TRUE(is_sum_free(a6.universe(), a6));
  auto a12 = middle_third_A2(12);
  EXPECT_EQ(a12.labels(), (Labels{3, 4, 9, 10, 11}));
  EXPECT_FALSE(is_sum_free(a12.universe(), a12));
  EXPECT_THROW(middle_third_A1(1), Error);
  EXPECT_THROW(middle_third_A2(0), Error);
}

TEST(Construct, Coset) {
  auto z6 = make_group({6});
  std::vector<Element> two{Element{2}};
  auto h = generated_subgroup(z6, two);
  EXPECT_EQ(coset(h, Element{1}).labels(), (Labels{1, 3, 5}));
  auto z4 = make_group({4});
  std::vector<Element> g2{Element{2}};
  EXPECT_EQ(coset(generated_subgroup(z4, g2), Element{1}).labels(), (Labels{1, 3}));
  try {
    coset(h, Element{4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
  std::vector<Element> one{Element{1}};
  EXPECT_THROW(coset(generated_subgroup(z6, one), Element{1}), Error);
}

TEST(Construct, PeriodicAndLift) {
  EXPECT_EQ(periodic_residues(2, 5, 12).labels(), (Labels{2, 7, 12}));
  EXPECT_EQ(periodic_residues(1, 2, 9), odds(9));
  EXPECT_THROW(periodic_residues(0, 5, 10), Error);
  EXPECT_THROW(periodic_residues(5, 5, 10), Error);

  auto z5 = Universe::group(make_group({5}));
  Labels a{1, 4}, b{2, 3};
  EXPECT_EQ(lift_mod_sumfree(ElemSet::from_labels(z5, a), 10).labels(), (Labels{1, 4, 6, 9}));
  EXPECT_EQ(lift_mod_sumfree(ElemSet::from_labels(z5, b), 8).labels(), (Labels{2, 3, 7, 8}));
  Labels bad{1, 2};
  try {
    lift_mod_sumfree(ElemSet::from_labels(z5, bad), 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(Construct, KolountzakisB) {
  EXPECT_EQ(kolountzakis_B(5).labels(), (Labels{2, 3}));
  EXPECT_EQ(kolountzakis_B(11).labels(), (Labels{4, 5, 6, 7}));
  for (std::uint64_t p : {5u, 11u}) EXPECT_GT(3 * kolountzakis_B(p).cardinality(), p - 1);
  try {
    kolountzakis_B(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPrime);
  }
  EXPECT_THROW(kolountzakis_B(8), Error);
}

// Constructors that promise sum-freeness keep it across wide parameter
// ranges.
TEST(ConstructProperties, SumFreeOutputs) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    auto o = odds(n);
    EXPECT_TRUE(is_sum_free(o.universe(), o));
    EXPECT_EQ(o.cardinality(), static_cast<std::size_t>((n + 1) / 2));
    for (const auto& e : extremal_intervals(n)) {
      EXPECT_TRUE(is_sum_free(e.universe(), e)) << n;
      EXPECT_EQ(e.cardinality(), static_cast<std::size_t>((n + 1) / 2));
    }
    if (n >= 2) {
      auto a1 = middle_third_A1(static_cast<std::uint64_t>(n));
      EXPECT_TRUE(is_sum_free(a1.universe(), a1)) << n;
    }
    if (is_prime(static_cast<std::uint64_t>(n)) && n % 3 == 2) {
      auto b = kolountzakis_B(static_cast<std::uint64_t>(n));
      EXPECT_TRUE(is_sum_free(b.universe(), b)) << n;
    }
  }
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t m = 1; m < n; ++m)
      for (std::int64_t w : {1, 37, 500}) {
        auto s = periodic_residues(m, n, w);
        // x + y = z needs 2m = m (mod n), impossible for 0 < m < n.
        EXPECT_TRUE(is_sum_free(s.universe(), s)) << m << " " << n << " " << w;
      }
}

TEST(ConstructProperties, LiftsOfSumFreeResidues) {
  for (std::uint64_t n = 2; n <= 9; ++n) {
    auto u = Universe::group(make_group({n}));
    const std::size_t k = u.ground_size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      ElemSet a(u);
      for (std::size_t i = 0; i < k; ++i)
        if ((m >> i) & 1u) a.insert_ground(i);
      if (!is_sum_free(u, a)) continue;
      auto s = lift_mod_sumfree(a, 120);
      ASSERT_TRUE(is_sum_free(s.universe(), s)) << n << " " << m;
    }
  }
}

TEST(ConstructProperties, CosetsOfAllIndex2Subgroups) {
  for (std::uint64_t n = 2; n <= 32; n += 2)
    for (const auto& g : abelian_groups_of_order(n))
      for (const auto& h : index2_subgroups(g)) {
        Element out{0};
        while (h.contains(out)) ++out.index;
        auto c = coset(h, out);
        EXPECT_TRUE(is_sum_free(c.universe(), c)) << g.label();
        EXPECT_EQ(c.cardinality(), h.size());
        for (auto e : h.elements()) EXPECT_FALSE(c.contains(static_cast<std::int64_t>(e.index)));
      }
}

TEST(ConstructProperties, CosetsOfProperSubgroups) {
  // For index 3, (H + g) + (H + g) = H + 2g, which differs from H + g.
  for (std::uint64_t n : {3u, 6u, 9u, 12u, 15u, 27u}) {
    for (const auto& g : abelian_groups_of_order(n)) {
      for (std::uint64_t x = 1; x < g.order(); ++x) {
        std::vector<Element> gen{Element{x}};
        auto h = generated_subgroup(g, gen);
        if (3 * h.size() != g.order()) continue;
        for (std::uint64_t y = 0; y < g.order(); ++y) {
          if (h.contains(Element{y})) continue;
          auto c = coset(h, Element{y});
          EXPECT_TRUE(is_sum_free(c.universe(), c)) << g.label();
        }
      }
    }
  }
}
