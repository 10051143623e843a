#include "hilbertkit/chern.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hilbertkit;
using hilbertkit::testing::ci_grid;
using hilbertkit::testing::ci_small_subgrid;

namespace {

TruncSeries S(std::size_t K, std::vector<Rational> c) { return TruncSeries(K, std::move(c)); }

}  // namespace

TEST(CompleteIntersection, Basics) {
  CompleteIntersection ci(4, {2, 3});
  EXPECT_EQ(ci.m(), 2u);
  EXPECT_EQ(ci.degree(), 6);
  EXPECT_EQ(ci.to_string(), "n=4 degrees=2,3");
  EXPECT_THROW(CompleteIntersection(1, {2, 2}), std::invalid_argument);
  EXPECT_THROW(CompleteIntersection(3, {0}), std::invalid_argument);
}

TEST(ChernTangent, Examples) {
  for (unsigned d = 1; d <= 6; ++d)
    EXPECT_EQ(chern_tangent(CompleteIntersection(2, {d})), S(2, {1, Rational(3 - static_cast<long>(d))}));
  EXPECT_EQ(chern_tangent(CompleteIntersection(3, {})), S(4, {1, 4, 6, 4}));
  // (1+h)^4 / (1+2h) = 1 + 2h + 2h^2 mod h^3
  EXPECT_EQ(chern_tangent(CompleteIntersection(3, {2})), S(3, {1, 2, 2}));
}

TEST(ChernCone, Examples) {
  EXPECT_EQ(chern_cone_normal(CompleteIntersection(2, {5})), S(2, {1, 4}));
  EXPECT_EQ(chern_cone_normal(CompleteIntersection(5, {1, 1})), TruncSeries::one(4));
  EXPECT_EQ(chern_cone_tangent(CompleteIntersection(5, {1, 1})), TruncSeries::one(4));
  EXPECT_EQ(chern_cone_tangent(CompleteIntersection(4, {3})), S(4, {1, -2, 4, -8}));
}

TEST(ToddClass, Examples) {
  EXPECT_EQ(todd_class(CompleteIntersection(1, {})), S(2, {1, 1}));
  for (unsigned d = 1; d <= 6; ++d)
    EXPECT_EQ(todd_class(CompleteIntersection(2, {d})), S(2, {1, make_rational(3 - static_cast<long>(d), 2)}));
  for (const auto& ci : ci_grid()) EXPECT_EQ(todd_class(ci).coefficient(0), 1);
}

TEST(EulerCharTwist, Examples) {
  EXPECT_EQ(euler_char_twist(CompleteIntersection(2, {}), 1), 3);
  EXPECT_EQ(euler_char_twist(CompleteIntersection(2, {3}), 0), 0);
  EXPECT_EQ(euler_char_twist(CompleteIntersection(3, {2}), 2), 9);
}

TEST(HilbertHrr, Examples) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(hilbert_poly_hrr(CompleteIntersection(n, {})), binom_poly(n, n));
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned d = 1; d <= 4; ++d)
      EXPECT_EQ(hilbert_poly_hrr(CompleteIntersection(n, {d})),
                binom_poly(n, n) - binom_poly(static_cast<long>(n) - static_cast<long>(d), n));
  for (const auto& ci : ci_grid()) {
    UniPoly p = hilbert_poly_hrr(ci);
    EXPECT_EQ(p.leading_coefficient(), Rational(ci.degree()) / Rational(factorial(ci.m()))) << ci.to_string();
  }
}

TEST(HilbertHrr, AgreesWithEulerCharacteristics) {
  for (const auto& ci : ci_grid()) {
    UniPoly p = hilbert_poly_hrr(ci);
    for (long d = -3; d <= 6; ++d) EXPECT_EQ(p(d), Rational(euler_char_twist(ci, d))) << ci.to_string() << " d=" << d;
  }
}

TEST(ProjectiveCharacter, Examples) {
  for (unsigned d = 1; d <= 6; ++d) {
    CompleteIntersection curve(2, {d});
    EXPECT_EQ(projective_character(curve, Partition({1})), d * (d - 1));
    EXPECT_EQ(projective_character(curve, Partition()), d);
  }
  CompleteIntersection linear(6, {1, 1});
  for (const auto& lambda : partitions_up_to(4, 2, 4))
    EXPECT_EQ(projective_character(linear, lambda), lambda.size() == 0 ? 1 : 0) << lambda.to_string();
  EXPECT_THROW(projective_character(CompleteIntersection(2, {2}), Partition({1, 1})), std::invalid_argument);
  // lambda_1 beyond the codimension
  EXPECT_EQ(projective_character(CompleteIntersection(3, {3}), Partition({2})), 0);
}

TEST(HilbertCharacters, Examples) {
  for (unsigned d = 1; d <= 6; ++d) {
    UniPoly p = hilbert_poly_characters(CompleteIntersection(2, {d}));
    EXPECT_EQ(p.coefficient(0), make_rational(static_cast<long>(d) * (3 - static_cast<long>(d)), 2));
  }
  EXPECT_EQ(hilbert_poly_characters(CompleteIntersection(3, {2})), UniPoly({1, 2, 1}));
  for (const auto& ci : ci_grid())
    if (ci.m() == 1) {
      auto c = projective_characters(ci);
      EXPECT_EQ(hilbert_poly_characters(ci).coefficient(0),
                Rational(c[Partition()]) - Rational(c[Partition({1})]) / 2);
    }
}

TEST(EulerTop, Examples) {
  EXPECT_EQ(euler_top(CompleteIntersection(2, {3})), 0);
  EXPECT_EQ(euler_top(CompleteIntersection(2, {})), 3);
  EXPECT_EQ(euler_top(CompleteIntersection(3, {2})), 4);
  for (unsigned d = 1; d <= 6; ++d) {
    long g = static_cast<long>((d - 1) * (d - 2) / 2);
    EXPECT_EQ(euler_top(CompleteIntersection(2, {d})), 2 - 2 * g);
  }
}

TEST(SeriesOracle, Examples) {
  EXPECT_EQ(ci_hilbert_series_oracle(CompleteIntersection(4, {})), binom_poly(4, 4));
  EXPECT_EQ(ci_hilbert_series_oracle(CompleteIntersection(3, {3})), binom_poly(3, 3) - binom_poly(0, 3));
  EXPECT_EQ(ci_hilbert_series_oracle(CompleteIntersection(3, {2, 2})), UniPoly({0, 4}));
}

TEST(Grid, ThreeRoutesAgree) {
  auto all = ci_grid();
  EXPECT_GT(all.size(), 300u);
  for (const auto& ci : all) {
    UniPoly oracle = ci_hilbert_series_oracle(ci);
    EXPECT_EQ(hilbert_poly_hrr(ci), oracle) << ci.to_string();
    EXPECT_EQ(hilbert_poly_characters(ci), oracle) << ci.to_string();
  }
}

TEST(Grid, TangentClassByBothRoutes) {
  for (const auto& ci : ci_grid()) EXPECT_EQ(chern_tangent(ci), chern_tangent_via_twist(ci)) << ci.to_string();
}

TEST(Grid, TangentDeterminantsExpandInCharacters) {
  for (const auto& ci : ci_grid()) {
    const unsigned m = ci.m();
    auto chars = projective_characters(ci);
    auto c = class_sequence(chern_tangent(ci));
    for (const auto& lambda : partitions_up_to(m, m, m)) {
      Rational lhs = delta_det(conjugate(lambda), c) * Rational(ci.degree());
      Rational rhs = 0;
      for (const auto& [mu, deg] : chars) {
        if (!contains(lambda, mu)) continue;
        Rational term = Rational(d_coeff(lambda, mu, m)) * Rational(deg);
        rhs += mu.size() % 2 ? Rational(-term) : term;
      }
      EXPECT_EQ(lhs, rhs) << ci.to_string() << " " << lambda.to_string();
    }
  }
}

TEST(Grid, IntegralityOfScaledCoefficients) {
  for (const auto& ci : ci_grid()) {
    UniPoly p = hilbert_poly_characters(ci);
    for (unsigned k = 0; k <= ci.m(); ++k)
      EXPECT_TRUE(is_integer(p.coefficient(k) * Rational(scaling_factor(k, ci.m()) * factorial(k))));
    for (const auto& [mu, deg] : projective_characters(ci)) EXPECT_GE(deg, 0);
  }
}

TEST(FormulaLevel, RationalNormalCurve) {
  for (unsigned n = 2; n <= 10; ++n) {
    std::map<Partition, Integer> chars{{Partition(), n}, {Partition({1}), 2 * (n - 1)}};
    EXPECT_EQ(hilbert_coefficient_from_characters(1, 0, n, chars), 1);
    EXPECT_EQ(hilbert_coefficient_from_characters(1, 1, n, chars), n);
  }
}

TEST(GrobnerRoute, GenericIdealsMatchOracle) {
  std::uint64_t seed = 11;
  for (const auto& ci : ci_small_subgrid())
    EXPECT_EQ(hilbert_poly_grobner(ci, seed++), ci_hilbert_series_oracle(ci)) << ci.to_string();
}
