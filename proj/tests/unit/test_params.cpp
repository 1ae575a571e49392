#include <gtest/gtest.h>

#include <cmath>

#include "gpa/params.hpp"

using gpa::resolve_params;

TEST(ResolveParams, PureDegreeProportional) {
  const auto p = resolve_params(2, 0.5, 0.3);
  EXPECT_DOUBLE_EQ(p.B, 0.0);
  EXPECT_DOUBLE_EQ(p.p_tri, 0.3);
  EXPECT_NEAR(p.shift_a, 0.0, 1e-12);
  EXPECT_EQ(p.n0, 4);
  EXPECT_TRUE(p.feasible);
}

TEST(ResolveParams, PositiveShift) {
  const auto p = resolve_params(2, 0.25, 0.3);
  EXPECT_DOUBLE_EQ(p.B, 1.0);
  EXPECT_NEAR(p.shift_a, 10.0, 1e-12);
}

TEST(ResolveParams, NegativeShift) {
  const auto p = resolve_params(2, 0.8, 0.3);
  EXPECT_NEAR(p.B, -1.2, 1e-12);
  EXPECT_NEAR(p.shift_a, 2.8 / 1.3 - 4.0, 1e-12);
  EXPECT_NEAR(p.shift_a, -1.84615, 1e-5);
}

TEST(ResolveParams, LowerBoundaryIsUniformPicks) {
  const auto p = resolve_params(2, 0.15, 0.3);
  EXPECT_TRUE(std::isinf(p.shift_a));
  EXPECT_TRUE(p.uniform_picks());
  EXPECT_DOUBLE_EQ(gpa::implied_degree_coeff(2, p.p_tri, p.shift_a), 0.15);
}

TEST(ResolveParams, Infeasible) {
  EXPECT_THROW(resolve_params(2, 0.9, 0.3), gpa::InfeasibleParams);
  EXPECT_THROW(resolve_params(2, 0.85, 0.3), gpa::InfeasibleParams);  // upper bound is open
  EXPECT_THROW(resolve_params(2, 0.1, 0.3), gpa::InfeasibleParams);
}

TEST(ResolveParams, InvalidInput) {
  EXPECT_THROW(resolve_params(1, 0.5, 0.3), gpa::InvalidInput);
  EXPECT_THROW(resolve_params(0, 0.5, 0.0), gpa::InvalidInput);
  EXPECT_THROW(resolve_params(2, 1.5, 0.3), gpa::InvalidInput);
  EXPECT_THROW(resolve_params(2, 0.5, -0.1), gpa::InvalidInput);
  EXPECT_THROW(resolve_params(3, 0.5, 1.5), gpa::InvalidInput);
}

TEST(ResolveParams, MEqualsOneWithoutTriangles) {
  const auto p = resolve_params(1, 0.5, 0.0);
  EXPECT_EQ(p.n0, 3);
  EXPECT_NEAR(p.shift_a, 0.0, 1e-12);
}

// A = p_tri/m + (m - 2 p_tri)/(2m + a) and 2mA + B = m over a grid of inputs.
TEST(ResolveParams, IdentitiesHoldAcrossFeasibleRange) {
  for (int m = 2; m <= 5; ++m) {
    for (double D = 0.0; D <= 1.0; D += 0.1) {
      for (double A = 0.0; A < 1.0; A += 0.0125) {
        if (A < D / m - 1e-12 || A >= 1.0 - D / m) continue;
        const auto p = resolve_params(m, A, D);
        EXPECT_NEAR(2.0 * m * p.A + p.B, m, 1e-12);
        EXPECT_NEAR(gpa::implied_degree_coeff(m, p.p_tri, p.shift_a), A, 1e-10) << m << ' ' << A << ' ' << D;
        EXPECT_GT(p.shift_a, -m);
      }
    }
  }
}
