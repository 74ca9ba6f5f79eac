#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ginibre/errors.hpp"

namespace ginibre {

template <class Scalar>
struct CgReport {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solution;
  std::size_t iterations = 0;
  /// |r_k| for k = 0..iterations (r_0 = b since x_0 = 0). Entries come from
  /// the CG recurrence; whenever it signals convergence the true residual
  /// b - A x_k is recomputed and recorded instead.
  std::vector<double> residual_history;
  bool converged = false;
};

/// Plain conjugate gradient for A x = b with A Hermitian positive definite,
/// accessed only through `apply_a(v)`. Starts at x_0 = 0 and stops once
/// |r_k| / |b| <= tol or after max_iter steps; non-convergence is reported,
/// not thrown. Throws BreakdownError on NaN/Inf and ArgumentError for
/// tol <= 0.
template <class Scalar, class ApplyA>
CgReport<Scalar> cg_solve(ApplyA&& apply_a, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
                          double tol, std::size_t max_iter) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (!(tol > 0.0)) throw ArgumentError("cg_solve: tol must be positive");

  CgReport<Scalar> report;
  report.solution = Vector::Zero(b.size());
  const double b_norm = b.norm();
  report.residual_history.push_back(b_norm);
  if (b_norm == 0.0) {
    report.converged = true;
    return report;
  }

  Vector r = b;
  Vector p = r;
  double rr = r.squaredNorm();
  for (std::size_t k = 1; k <= max_iter; ++k) {
    const Vector ap = apply_a(p);
    const Scalar pap = p.dot(ap);
    const Scalar alpha = Scalar(rr) / pap;
    report.solution += alpha * p;
    r -= alpha * ap;
    double rr_next = r.squaredNorm();
    if (!std::isfinite(rr_next) || !std::isfinite(std::abs(alpha))) {
      throw BreakdownError("cg_solve: non-finite value in iteration " + std::to_string(k), k);
    }
    report.iterations = k;
    if (std::sqrt(rr_next) <= tol * b_norm) {
      // Confirm with the true residual; the recurrence drifts in floating point.
      r = b - apply_a(report.solution);
      rr_next = r.squaredNorm();
      if (std::sqrt(rr_next) <= tol * b_norm) {
        report.residual_history.push_back(std::sqrt(rr_next));
        report.converged = true;
        return report;
      }
    }
    report.residual_history.push_back(std::sqrt(rr_next));
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }
  return report;
}

}  // namespace ginibre
