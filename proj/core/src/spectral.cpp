#include "ginibre/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ginibre/errors.hpp"

namespace ginibre {

namespace {

constexpr double kSingularFloor = 1e-30;
constexpr double kDefectiveResidual = 1e-6;
constexpr double kSingularEigenbasis = 1e-12;  // reciprocal condition of V

bool is_real_valued(const Eigen::MatrixXcd& a) { return a.imag().isZero(0.0); }

void require_square(const Eigen::MatrixXcd& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ArgumentError(std::string(who) + ": expected a non-empty square matrix");
  }
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a) {
  require_square(a, "singular_values");
  if (is_real_valued(a)) {
    const Eigen::MatrixXd re = a.real();
    return Eigen::BDCSVD<Eigen::MatrixXd>(re).singularValues();
  }
  return Eigen::BDCSVD<Eigen::MatrixXcd>(a).singularValues();
}

double smallest_singular_value(const Eigen::MatrixXcd& a) {
  const Eigen::VectorXd s = singular_values(a);
  return s(s.size() - 1);
}

Eigen::VectorXd gram_eigenvalues(const Eigen::MatrixXcd& a) {
  require_square(a, "gram_eigenvalues");
  Eigen::VectorXd ev;
  if (is_real_valued(a)) {
    const Eigen::MatrixXd re = a.real();
    const Eigen::MatrixXd y = re * re.transpose();
    ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(y, Eigen::EigenvaluesOnly).eigenvalues();
  } else {
    const Eigen::MatrixXcd y = a * a.adjoint();
    ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(y, Eigen::EigenvaluesOnly).eigenvalues();
  }
  return ev.cwiseMax(0.0);
}

double condition_number(const Eigen::MatrixXcd& a) {
  const Eigen::VectorXd s = singular_values(a);
  const double smin = s(s.size() - 1);
  if (!(smin >= kSingularFloor)) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

SpectralData eigen_decomposition(const Eigen::MatrixXcd& x) {
  require_square(x, "eigen_decomposition");
  SpectralData out;
  if (is_real_valued(x)) {
    const Eigen::MatrixXd re = x.real();
    Eigen::EigenSolver<Eigen::MatrixXd> es(re, true);
    if (es.info() != Eigen::Success) throw DefectiveMatrix("eigen solver did not converge", NAN);
    out.eigenvalues = es.eigenvalues();
    out.right = es.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(x, true);
    if (es.info() != Eigen::Success) throw DefectiveMatrix("eigen solver did not converge", NAN);
    out.eigenvalues = es.eigenvalues();
    out.right = es.eigenvectors();
  }

  const double xnorm = x.norm();
  const double scale = xnorm > 0.0 ? xnorm : 1.0;
  const Eigen::MatrixXcd& v = out.right;
  out.residual = (x * v - v * out.eigenvalues.asDiagonal()).norm() / scale;

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
  const double rcond = lu.rcond();
  if (!(rcond > kSingularEigenbasis)) {
    throw DefectiveMatrix("eigenvector matrix is numerically singular", out.residual);
  }
  const Eigen::MatrixXcd vinv = lu.inverse();
  out.reconstruction = (x - v * out.eigenvalues.asDiagonal() * vinv).norm() / scale;
  if (!(out.reconstruction <= kDefectiveResidual) || !(out.residual <= kDefectiveResidual)) {
    throw DefectiveMatrix("reconstruction residual exceeds 1e-6 |X|",
                          std::max(out.reconstruction, out.residual));
  }

  out.left = vinv.adjoint();
  const Eigen::Index n = x.rows();
  out.overlaps.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.overlaps(i) = v.col(i).squaredNorm() * vinv.row(i).squaredNorm();
  }
  return out;
}

double min_gap(std::span<const std::complex<double>> eigenvalues) {
  if (eigenvalues.size() < 2) throw ArgumentError("min_gap: need at least two eigenvalues");
  std::vector<std::complex<double>> v(eigenvalues.begin(), eigenvalues.end());
  std::sort(v.begin(), v.end(), [](auto a, auto b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  // Sweep in order of real part; a pair can only beat `best` if its real
  // parts are closer than `best`.
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j].real() - v[i].real() >= best) break;
      best = std::min(best, std::abs(v[j] - v[i]));
    }
  }
  return best;
}

double kappa_v_upper(std::span<const double> overlaps, Eigen::Index n) {
  const double sum = std::accumulate(overlaps.begin(), overlaps.end(), 0.0);
  return std::sqrt(static_cast<double>(n) * sum);
}

Eigen::MatrixXcd shifted(const Eigen::MatrixXcd& x, std::complex<double> z) {
  Eigen::MatrixXcd a = x;
  a.diagonal().array() -= z;
  return a;
}

Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& x, std::complex<double> z) {
  require_square(x, "hermitize");
  const Eigen::Index n = x.rows();
  const Eigen::MatrixXcd a = shifted(x, z);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  h.topRightCorner(n, n) = a;
  h.bottomLeftCorner(n, n) = a.adjoint();
  return h;
}

}  // namespace ginibre
