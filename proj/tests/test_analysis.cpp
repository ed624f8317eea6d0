#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sumfree/analysis.hpp"
#include "sumfree/construct.hpp"
#include "sumfree/error.hpp"

using namespace sumfree;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

}  // namespace

TEST(Density, FormulaCases) {
  auto c6 = v_of(make_group({6}));
  EXPECT_EQ(c6.v_case, 1);
  EXPECT_EQ(c6.v, R(1, 2));  // p = 2
  auto c5 = v_of(make_group({5}));
  EXPECT_EQ(c5.v, R(2, 5));
  auto c9 = v_of(make_group({9}));
  EXPECT_EQ(c9.v_case, 2);
  EXPECT_EQ(c9.v, R(1, 3));
  auto c7 = v_of(make_group({7}));
  EXPECT_EQ(c7.v_case, 3);
  EXPECT_EQ(c7.v, R(2, 7));
  auto c77 = v_of(make_group({7, 7}));
  EXPECT_EQ(c77.v, R(2, 7));  // exponent 7
  EXPECT_EQ(v_of(make_group({13})).v, R(4, 13));
  EXPECT_THROW(v_of(GroupSpec{}), Error);
}

TEST(Density, MuExamples) {
  auto r7 = mu_of(make_group({7}));
  EXPECT_EQ(r7.mu, R(2, 7));
  EXPECT_TRUE(r7.agree);
  EXPECT_TRUE(is_sum_free(r7.witness.universe(), r7.witness));
  EXPECT_EQ(mu_of(make_group({2, 2})).mu, R(1, 2));
}

TEST(DensityProperties, MuEqualsVUpTo32) {
  for (std::uint64_t n = 2; n <= 32; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      auto r = mu_of(g);
      EXPECT_TRUE(r.agree) << g.label() << " mu=" << to_string(r.mu) << " v=" << to_string(r.v);
      EXPECT_GE(r.mu, R(2, 7));
      EXPECT_LE(r.mu, R(1, 2));
      EXPECT_EQ(r.mu == R(1, 2), n % 2 == 0) << g.label();
      if (n <= 18)
        EXPECT_EQ(r.max_cardinality, oracle::max_sum_free_size_group(oracle::Group{g.moduli()}));
    }
}

TEST(DensityProperties, FormulaIntegrality) {
  for (std::uint64_t n = 2; n <= 1000; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      const auto x = v_of(g).v * R(static_cast<std::int64_t>(n));
      EXPECT_EQ(x.denominator(), 1) << g.label();
    }
}

TEST(Index2, ReportAndEquality) {
  auto r = index2_report(make_group({2, 2}));
  EXPECT_EQ(r.index2_subgroups, 3u);
  EXPECT_EQ(r.half_size_sets, 3u);
  EXPECT_EQ(r.max_cardinality, 2u);
  EXPECT_TRUE(r.equality);
  try {
    index2_report(make_group({9}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotApplicable);
  }
  for (std::uint64_t n = 2; n <= 32; n += 2)
    for (const auto& g : abelian_groups_of_order(n)) {
      auto rep = index2_report(g);
      EXPECT_TRUE(rep.equality) << g.label();
      EXPECT_EQ(rep.index2_subgroups, (std::size_t{1} << even_component_count(g)) - 1);
    }
}

TEST(BabaiSos, Floor) {
  EXPECT_TRUE(babai_sos_floor(make_group({6})));
  EXPECT_TRUE(babai_sos_floor(make_group({9})));
  EXPECT_TRUE(babai_sos_floor(make_group({5})));
  for (std::uint64_t n = 2; n <= 24; ++n)
    for (const auto& g : abelian_groups_of_order(n)) EXPECT_TRUE(babai_sos_floor(g)) << g.label();
}

TEST(AlonKleitman, SixByHand) {
  auto r = ak_report(6);
  ASSERT_EQ(r.divisors.size(), 3u);
  // A1 = {3, 4}, A2 = {2, 5}.
  EXPECT_EQ(r.divisors[0].d, 1u);
  EXPECT_EQ(r.divisors[0].slack, R(1, 3) - R(2, 7));
  EXPECT_EQ(r.divisors[1].d, 2u);
  EXPECT_EQ(r.divisors[1].slack, R(1, 3) - R(2, 7));
  EXPECT_EQ(r.divisors[2].d, 3u);
  EXPECT_EQ(r.divisors[2].slack, R(0));
  EXPECT_EQ(r.min_slack, R(0));
  EXPECT_EQ(r.min_divisor, 3u);
  EXPECT_TRUE(r.holds);
}

TEST(AlonKleitman, PrimeHasOnlyUnitDivisor) {
  auto r = ak_report(5);
  ASSERT_EQ(r.divisors.size(), 1u);
  EXPECT_EQ(r.divisors[0].d, 1u);
  EXPECT_THROW(ak_report(1), Error);
}

TEST(AlonKleitman, HoldsUpTo2000) {
  for (std::uint64_t n = 2; n <= 2000; ++n) ASSERT_TRUE(ak_inequality(n)) << n;
}

TEST(Freiman, Verdicts) {
  auto o = odds(19);
  EXPECT_EQ(freiman_check(o).verdict, FreimanVerdict::kPass);
  auto u = Universe::interval(1, 20);
  std::vector<std::int64_t> small{1, 4};
  EXPECT_EQ(freiman_check(ElemSet::from_labels(u, small)).verdict, FreimanVerdict::kVacuous);
  EXPECT_EQ(freiman_check(ElemSet(u)).verdict, FreimanVerdict::kVacuous);
  std::vector<std::int64_t> top{10, 11, 12, 13, 14, 15, 16, 17, 18, 19};
  EXPECT_EQ(freiman_check(ElemSet::from_labels(u, top)).verdict, FreimanVerdict::kPass);
  std::vector<std::int64_t> bad{1, 2};
  EXPECT_THROW(freiman_check(ElemSet::from_labels(u, bad)), Error);
  EXPECT_THROW(freiman_check(ElemSet(Universe::group(make_group({5})))), Error);
}

TEST(Freiman, ThresholdBoundary) {
  // k = 24 needs 12|S| >= 144, so exactly 12 elements sit on the boundary.
  auto u = Universe::interval(1, 24);
  std::vector<std::int64_t> top;
  for (std::int64_t x = 13; x <= 24; ++x) top.push_back(x);
  EXPECT_EQ(freiman_check(ElemSet::from_labels(u, top)).verdict, FreimanVerdict::kPass);
  top.erase(top.begin());
  EXPECT_EQ(freiman_check(ElemSet::from_labels(u, top)).verdict, FreimanVerdict::kVacuous);
}

TEST(FreimanProperties, NeverFailsUpTo20) {
  for (std::int64_t n = 1; n <= 20; ++n) {
    auto u = Universe::interval(1, n);
    enumerate_sum_free(u, [&](const ElemSet& s) {
      auto r = freiman_check(s);
      ASSERT_NE(r.verdict, FreimanVerdict::kFail) << n << " " << r.violated;
    });
  }
}

TEST(Sapozhenko, SmallRatios) {
  // f(3) = 6; f(1, 3) = 6; 2^2 = 4.
  EXPECT_EQ(sapozhenko_ratio(3), R(6, 10));
  EXPECT_EQ(sapozhenko_ratio(1), R(2, 4));
  EXPECT_THROW(sapozhenko_ratio(0), Error);
}

TEST(Giudici, Size1Scan) {
  auto hits = giudici_size1_scan(16);
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(hits[0].group.label(), "C2");
  EXPECT_EQ(hits[1].group.label(), "C3");
  EXPECT_EQ(hits[2].group.label(), "C4");
  for (const auto& h : hits) EXPECT_TRUE(h.witnesses_prime_order);
  EXPECT_EQ(hits[2].witnesses, (std::vector<Element>{Element{2}}));
}

TEST(Giudici, Size2Scan) {
  auto pairs = giudici_size2_scan(12);
  bool c4 = false;
  for (const auto& [g, s] : pairs) {
    EXPECT_EQ(s.cardinality(), 2u);
    EXPECT_TRUE(is_maximal_sum_free(s.universe(), s));
    c4 = c4 || g.label() == "C4";
  }
  EXPECT_TRUE(c4);
}

TEST(Lev, LeadingTerms) {
  auto k = lev_leading_term(make_group({2, 2}));
  EXPECT_EQ(k.leading, 12u);
  EXPECT_EQ(k.f, 7u);
  EXPECT_EQ(k.ratio, R(7, 12));
  auto z4 = lev_leading_term(make_group({4}));
  EXPECT_EQ(z4.leading, 4u);
  EXPECT_EQ(z4.f, 5u);
  EXPECT_EQ(z4.ratio, R(5, 4));
  EXPECT_EQ(lev_leading_term(make_group({2})).ratio, R(1));
  EXPECT_THROW(lev_leading_term(make_group({5})), Error);
}

TEST(RationalText, Formatting) {
  EXPECT_EQ(to_string(R(6, 10)), "3/5");
  EXPECT_EQ(to_string(R(4, 2)), "2");
  EXPECT_DOUBLE_EQ(to_double(R(1, 4)), 0.25);
}
