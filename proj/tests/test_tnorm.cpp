#include <gtest/gtest.h>

#include "support.hpp"

using namespace t2conv;
using ref::q;

TEST(Tnorm, LukasiewiczExample) {
  EXPECT_EQ(TnormSpec::lukasiewicz()(q(7, 10), q(6, 10)), q(3, 10));
  EXPECT_NEAR(TnormSpec::lukasiewicz()(0.7, 0.6), 0.3, 1e-15);
}

TEST(Tnorm, ProductUnit) {
  for (int i = 0; i <= 64; ++i) {
    Rational x = q(i, 64);
    EXPECT_EQ(TnormSpec::product()(x, Rational(1)), x);
    EXPECT_EQ(TnormSpec::product()(i / 64.0, 1.0), i / 64.0);
  }
}

TEST(Tnorm, OrdinalSumProductBlock) {
  auto t = ordinal_sum({{q(1, 5), q(4, 5), InnerNorm::product}});
  // phi(0.7) = 5/6, so the value is 0.2 + 0.6 * 25/36
  const Rational expected = q(1, 5) + q(3, 5) * q(25, 36);
  EXPECT_EQ(t(q(7, 10), q(7, 10)), expected);
  EXPECT_EQ(expected, q(37, 60));
  EXPECT_NEAR(t(0.7, 0.7), 37.0 / 60.0, 1e-12);
  EXPECT_EQ(t(q(1, 10), q(7, 10)), q(1, 10));
  EXPECT_EQ(t(q(9, 10), q(7, 10)), q(7, 10));
}

TEST(Tnorm, EmptyOrdinalSumIsMinimum) {
  auto t = ordinal_sum({});
  for (int i = 0; i <= 32; ++i)
    for (int j = 0; j <= 32; ++j) EXPECT_EQ(t(q(i, 32), q(j, 32)), ref::rmin(q(i, 32), q(j, 32)));
}

TEST(Tnorm, FullProductSummandIsProduct) {
  auto t = ordinal_sum({{0, 1, InnerNorm::product}});
  for (int i = 0; i <= 32; ++i)
    for (int j = 0; j <= 32; ++j) EXPECT_EQ(t(q(i, 32), q(j, 32)), q(i * j, 1024));
}

TEST(Tnorm, LukasiewiczHalfSummand) {
  auto t = ordinal_sum({{0, q(1, 2), InnerNorm::lukasiewicz}});
  EXPECT_EQ(t(q(1, 4), q(1, 4)), Rational(0));
  EXPECT_EQ(t(q(3, 8), q(3, 8)), q(1, 4));  // 1/2 * L(3/4, 3/4)
}

TEST(Tnorm, OrdinalSumRejectsOverlapAndDegenerate) {
  EXPECT_THROW(ordinal_sum({{0, q(1, 2), InnerNorm::product}, {q(1, 4), 1, InnerNorm::product}}), OverlappingSummands);
  EXPECT_THROW(ordinal_sum({{q(1, 2), q(1, 2), InnerNorm::product}}), DegenerateSummand);
}

TEST(Tnorm, MatchesCaseFormulaOnGrid) {
  std::vector<TnormSpec> specs = ref::zoo();
  specs.push_back(ordinal_sum({{q(1, 8), q(3, 8), InnerNorm::product}, {q(5, 8), q(7, 8), InnerNorm::lukasiewicz}}));
  for (const auto& t : specs) {
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        const Rational x = q(i, 40), y = q(j, 40);
        ASSERT_EQ(t(x, y), ref::tnorm(t, x, y)) << t.name() << " at " << x << ", " << y;
      }
  }
}

TEST(Tnorm, DoubleEvaluationTolerance) {
  // exact on dyadics for the piecewise-min kinds, 1e-12 relative otherwise
  for (const auto& t : ref::zoo()) {
    for (int i = 0; i <= 64; ++i)
      for (int j = 0; j <= 64; ++j) {
        const double x = i / 64.0, y = j / 64.0;
        const double want = ref::tnorm(t, x, y);
        const double got = t(x, y);
        if (t.kind() == TnormKind::product || t.kind() == TnormKind::ordinal_sum)
          ASSERT_LE(std::abs(got - want), 1e-12 * std::max(1.0, want)) << t.name();
        else
          ASSERT_EQ(got, want) << t.name();
      }
  }
}

TEST(Tnorm, AxiomsOnGrid) {
  constexpr int n = 24;
  std::vector<Rational> g;
  for (int i = 0; i <= n; ++i) g.push_back(q(i, n));
  for (const auto& t : ref::zoo()) {
    SCOPED_TRACE(t.name());
    for (const auto& x : g) {
      ASSERT_EQ(t(x, Rational(1)), x);
      for (const auto& y : g) {
        const Rational xy = t(x, y);
        ASSERT_EQ(xy, t(y, x));
        ASSERT_GE(xy, 0);
        ASSERT_LE(xy, ref::rmin(x, y));
        for (const auto& z : g) {
          if (y <= z) { ASSERT_LE(xy, t(x, z)); }
          ASSERT_EQ(t(xy, z), t(x, t(y, z)));
        }
      }
    }
  }
}

TEST(Tnorm, DeclaredClasses) {
  EXPECT_EQ(TnormSpec::minimum().declared_class(), ContinuityClass::continuous);
  EXPECT_EQ(TnormSpec::product().declared_class(), ContinuityClass::continuous);
  EXPECT_EQ(TnormSpec::lukasiewicz().declared_class(), ContinuityClass::continuous);
  EXPECT_EQ(ref::zoo()[5].declared_class(), ContinuityClass::continuous);
  EXPECT_EQ(TnormSpec::drastic().declared_class(), ContinuityClass::right_continuous);
  EXPECT_EQ(TnormSpec::nilpotent_minimum().declared_class(), ContinuityClass::left_continuous);
  EXPECT_TRUE(TnormSpec::drastic().is_right_continuous());
  EXPECT_FALSE(TnormSpec::nilpotent_minimum().is_right_continuous());
}

TEST(Tnorm, ProbeAgreesWithDeclaredClass) {
  auto expected = [](ContinuityClass c) {
    switch (c) {
      case ContinuityClass::continuous: return ContinuityVerdict::continuous;
      case ContinuityClass::right_continuous: return ContinuityVerdict::right_continuous_only;
      case ContinuityClass::left_continuous: return ContinuityVerdict::left_continuous_only;
      case ContinuityClass::neither: return ContinuityVerdict::neither;
    }
    return ContinuityVerdict::neither;
  };
  for (const auto& t : ref::zoo()) EXPECT_EQ(probe_continuity(t, 64).verdict, expected(t.declared_class())) << t.name();
}

TEST(Tnorm, NilpotentMinimumJumpsAcrossAntidiagonal) {
  auto p = probe_continuity(TnormSpec::nilpotent_minimum(), 64);
  ASSERT_TRUE(p.right_jump);
  EXPECT_FALSE(p.left_jump);
  EXPECT_TRUE(p.right_jump->from_above);
  EXPECT_DOUBLE_EQ(p.right_jump->x + p.right_jump->y, 1.0);
  EXPECT_EQ(p.right_jump->value, 0.0);
  EXPECT_DOUBLE_EQ(p.right_jump->limit, std::min(p.right_jump->x, p.right_jump->y));
}

TEST(Tnorm, DrasticJumpsAtTopFromBelow) {
  auto p = probe_continuity(TnormSpec::drastic(), 64);
  ASSERT_TRUE(p.left_jump);
  EXPECT_FALSE(p.right_jump);
  EXPECT_EQ(p.left_jump->y, 1.0);
  EXPECT_EQ(p.left_jump->limit, 0.0);
  EXPECT_EQ(TnormSpec::drastic()(0.5, 1.0), 0.5);
  EXPECT_EQ(TnormSpec::drastic()(0.5, 1.0 - 1e-9), 0.0);
}

TEST(Tnorm, ConditionalCancellativity) {
  EXPECT_TRUE(probe_conditional_cancellativity(TnormSpec::product(), 64).cancellative);
  EXPECT_TRUE(probe_conditional_cancellativity(TnormSpec::lukasiewicz(), 64).cancellative);
  auto m = probe_conditional_cancellativity(TnormSpec::minimum(), 64);
  EXPECT_FALSE(m.cancellative);
  ASSERT_TRUE(m.witness);
  EXPECT_NE(m.witness->x1, m.witness->x2);
  EXPECT_GT(m.witness->value, 0);
  EXPECT_EQ(TnormSpec::minimum()(m.witness->x1, m.witness->y), TnormSpec::minimum()(m.witness->x2, m.witness->y));
  // the hand-picked instance
  EXPECT_EQ(TnormSpec::minimum()(0.4, 0.3), TnormSpec::minimum()(0.6, 0.3));
}

TEST(Tnorm, NamesAndParsing) {
  for (const auto& t : ref::zoo()) {
    auto k = parse_tnorm_kind(to_string(t.kind()));
    ASSERT_TRUE(k);
    EXPECT_EQ(*k, t.kind());
  }
  EXPECT_FALSE(parse_tnorm_kind("hamacher"));
}
