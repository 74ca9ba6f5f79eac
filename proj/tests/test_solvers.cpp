#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ginibre/bounds.hpp"
#include "ginibre/ensembles.hpp"
#include "ginibre/errors.hpp"
#include "ginibre/solvers.hpp"

using namespace ginibre;

namespace {

auto diagonal_operator(const Eigen::VectorXd& d) {
  return [d](const Eigen::VectorXd& v) -> Eigen::VectorXd { return d.cwiseProduct(v); };
}

}  // namespace

TEST(CgSolve, IdentityConvergesInOneStep) {
  Eigen::VectorXd b(3);
  b << 0.3, -1.0, 2.0;
  const auto r = cg_solve<double>([](const Eigen::VectorXd& v) { return v; }, b, 1e-12, 10);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_NEAR((r.solution - b).norm(), 0.0, 1e-15);
}

TEST(CgSolve, TwoDistinctEigenvalues) {
  Eigen::VectorXd d(2), b(2);
  d << 1.0, 4.0;
  b << 1.0, 1.0;
  const auto r = cg_solve<double>(diagonal_operator(d), b, 1e-12, 10);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2u);
  EXPECT_NEAR(r.solution(0), 1.0, 1e-12);
  EXPECT_NEAR(r.solution(1), 0.25, 1e-12);
}

TEST(CgSolve, ZeroRightHandSide) {
  const auto r = cg_solve<double>([](const Eigen::VectorXd& v) { return v; },
                                  Eigen::VectorXd::Zero(4), 1e-8, 10);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0u);
}

TEST(CgSolve, ANormErrorWithinBoundAndMonotone) {
  const int n = 40;
  Eigen::VectorXd d(n), b(n);
  for (int i = 0; i < n; ++i) {
    d(i) = 1.0 + 99.0 * i / (n - 1);
    b(i) = std::cos(1.0 + i);
  }
  const Eigen::VectorXd exact = b.cwiseQuotient(d);
  const double kappa = d.maxCoeff() / d.minCoeff();
  auto a_norm = [&](const Eigen::VectorXd& e) { return std::sqrt(e.dot(d.cwiseProduct(e))); };
  const double e0 = a_norm(exact);
  double previous = e0;
  for (std::size_t k = 1; k <= 30; ++k) {
    const auto r = cg_solve<double>(diagonal_operator(d), b, 1e-300, k);
    const double ek = a_norm(r.solution - exact);
    EXPECT_LE(ek, cg_error_bound(kappa, static_cast<double>(k)) * e0 * (1 + 1e-12) + 1e-14);
    EXPECT_LE(ek, previous * (1 + 1e-12));
    previous = ek;
  }
}

TEST(CgSolve, ConvergedMeansSmallTrueResidual) {
  const auto x = sample_matrix(60, EnsembleKind::complex_gaussian, SeedSpec{1, 0});
  const std::complex<double> z(0.2, 0.5);
  const Eigen::MatrixXcd a = x - z * Eigen::MatrixXcd::Identity(60, 60);
  Eigen::VectorXcd b = Eigen::VectorXcd::Ones(60);
  b.normalize();
  auto apply = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return a.adjoint() * (a * v);
  };
  const auto r = cg_solve<std::complex<double>>(apply, b, 1e-8, 240);
  ASSERT_TRUE(r.converged);
  EXPECT_LE((b - apply(r.solution)).norm(), 1e-8);
  EXPECT_LE(r.residual_history.back(), 1e-8);
  EXPECT_EQ(r.residual_history.size(), r.iterations + 1);
  EXPECT_NEAR(r.residual_history.front(), 1.0, 1e-14);
}

TEST(CgSolve, NonConvergenceIsReported) {
  Eigen::VectorXd d = Eigen::VectorXd::LinSpaced(50, 1.0, 1e6);
  const auto r = cg_solve<double>(diagonal_operator(d), Eigen::VectorXd::Ones(50), 1e-14, 3);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 3u);
}

TEST(CgSolve, BreakdownOnNaN) {
  auto bad = [](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return v * std::numeric_limits<double>::quiet_NaN();
  };
  try {
    cg_solve<double>(bad, Eigen::VectorXd::Ones(3), 1e-8, 10);
    FAIL() << "expected BreakdownError";
  } catch (const BreakdownError& e) {
    EXPECT_EQ(e.iteration(), 1u);
  }
}

TEST(CgSolve, RejectsNonPositiveTolerance) {
  EXPECT_THROW(cg_solve<double>([](const Eigen::VectorXd& v) { return v; },
                                Eigen::VectorXd::Ones(2), 0.0, 10),
               ArgumentError);
}
