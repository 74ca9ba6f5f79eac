#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ginibre/bounds.hpp"
#include "ginibre/errors.hpp"

using namespace ginibre;

TEST(ScaleC, Examples) {
  EXPECT_NEAR(scale_c(100, 1.0), 1e-4, 1e-18);
  EXPECT_NEAR(scale_c(100, 0.01), 1e-3, 1e-17);
  EXPECT_NEAR(scale_c(100, 0.0), 1e-3, 1e-17);
  EXPECT_NEAR(scale_c(100, -1.0), 1e-4, 1e-18);
}

TEST(ScaleC, NonIncreasing) {
  for (double n : {10.0, 100.0, 1000.0}) {
    for (double d = 0.0; d < 1.0; d += 0.01) {
      EXPECT_LE(scale_c(n, d + 0.01), scale_c(n, d));
      EXPECT_LE(scale_c(2 * n, d), scale_c(n, d));
    }
  }
}

TEST(SvTailRhs, Examples) {
  EXPECT_NEAR(sv_tail_rhs(1.0, 100, 0.0, 1.0), 2.0, 1e-14);
  EXPECT_NEAR(sv_tail_rhs(0.01, 100, 0.3, 1.0), 0.0560887318, 1e-9);
  EXPECT_NEAR(sv_tail_rhs(0.01, 100, 0.0, 1.0), 0.1560517019, 1e-9);
  EXPECT_EQ(sv_tail_rhs(0.0, 100, 0.3, 1.0), 0.0);
  EXPECT_THROW(sv_tail_rhs(-1.0, 100, 0.3, 1.0), ArgumentError);
}

TEST(SvTailRhs, Monotonicity) {
  for (double eta : {0.0, 0.05, 0.3}) {
    double previous = 0.0;
    for (double x = 0.001; x <= 1.0; x += 0.001) {
      const double v = sv_tail_rhs(x, 100, eta, 1.0);
      EXPECT_GE(v, previous);
      previous = v;
      EXPECT_LE(sv_tail_rhs(x, 100, eta + 0.1, 1.0), v);
      EXPECT_LE(sv_tail_rhs(x, 100, -(eta + 0.1), 1.0), v);
    }
  }
}

TEST(SvTailRhs, SquareRootBranchOnRealAxis) {
  const double c = 2.5;
  EXPECT_NEAR(sv_tail_rhs(1e-12, 100, 0.0, c) / std::sqrt(1e-12), c, 1e-4);
}

TEST(KappaTailRhs, Examples) {
  EXPECT_NEAR(kappa_tail_rhs(100, 100, 0.0, 1.0), std::log(100.0) + 1.0 + std::exp(-100.0),
              1e-12);
  EXPECT_NEAR(kappa_tail_rhs(1000, 100, 1.0, 1.0), 0.0690776, 1e-6);
  EXPECT_TRUE(kappa_bound_applies({0.5, 0.5}));
  EXPECT_FALSE(kappa_bound_applies(0.99));
}

TEST(SstRhs, Examples) {
  EXPECT_NEAR(sst_rhs(0.04, 1.0, Field::real), 0.2, 1e-15);
  EXPECT_NEAR(sst_rhs(0.04, 0.2, Field::complex), 1.0, 1e-14);
}

TEST(OverlapBoundRhs, UnitDisk) {
  const double n = 100, t = 2;
  const double v = overlap_bound_rhs(Region({Disk{0.0, 1.0}}), n, t);
  const double expected = t * std::log(n) * n * n * std::numbers::pi / 2;
  EXPECT_NEAR(v, expected, 2e-3 * expected);
}

TEST(OverlapBoundRhs, AnnulusUsesPositivePartOnly) {
  const double n = 1e4;
  const double r0 = 0.9 - 1.0 / std::sqrt(n);
  const double integral = std::numbers::pi / 2 * std::pow(1 - r0 * r0, 2);
  const double v = overlap_bound_rhs(Region({Annulus{0.0, 0.9, 1.1}}), n, 1.0);
  const double expected = std::log(n) * n * n * integral;
  EXPECT_NEAR(v, expected, 0.02 * expected);
}

TEST(OverlapBoundRhs, EmptyRegion) { EXPECT_EQ(overlap_bound_rhs(Region(), 100, 1), 0.0); }

TEST(CgErrorBound, Examples) {
  EXPECT_EQ(cg_error_bound(1.0, 5), 0.0);
  EXPECT_NEAR(cg_error_bound(9.0, 1), 1.0, 1e-15);
  EXPECT_NEAR(cg_error_bound(9.0, 10), 2.0 / 1024.0, 1e-15);
  EXPECT_NEAR(cg_error_bound(9.0, 0), 2.0, 1e-15);
  EXPECT_THROW(cg_error_bound(0.5, 1), ArgumentError);
}
