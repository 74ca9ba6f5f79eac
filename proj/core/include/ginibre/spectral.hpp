#pragma once

#include <array>
#include <complex>
#include <span>

#include <Eigen/Dense>

namespace ginibre {

/// The shift z of X - z together with the derived eta = Im z and
/// delta = 1 - |z|^2. The derived values cannot be set independently.
class ShiftParams {
 public:
  explicit ShiftParams(std::complex<double> z = {}) noexcept : z_(z) {}

  std::complex<double> z() const noexcept { return z_; }
  double eta() const noexcept { return z_.imag(); }
  double delta() const noexcept { return 1.0 - std::norm(z_); }
  double abs_z_squared() const noexcept { return std::norm(z_); }

 private:
  std::complex<double> z_;
};

/// Eigen-decomposition X = sum_i lambda_i R_i L_i^* with <L_i, R_i> = 1.
struct SpectralData {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right;  ///< column i is R_i
  Eigen::MatrixXcd left;   ///< column i is L_i, i.e. the conjugated row i of V^{-1}
  Eigen::VectorXd overlaps;  ///< O_ii = |L_i|^2 |R_i|^2
  double residual = 0.0;     ///< |XV - VD|_F / |X|_F
  double reconstruction = 0.0;  ///< |X - V D V^{-1}|_F / |X|_F
};

/// Singular values sorted descending; the smallest (sigma_1 in the usual
/// random-matrix convention) is the last entry. Throws ArgumentError for
/// non-square input.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a);

/// Smallest singular value of a square matrix.
double smallest_singular_value(const Eigen::MatrixXcd& a);

/// Eigenvalues of A A^*, ascending, clamped at zero. Cheaper than an SVD and
/// accurate to eps * |A|^2 in absolute terms; used by the Monte-Carlo drivers.
Eigen::VectorXd gram_eigenvalues(const Eigen::MatrixXcd& a);

/// sigma_max / sigma_min, or +infinity when sigma_min < 1e-30.
double condition_number(const Eigen::MatrixXcd& a);

/// Throws DefectiveMatrix when V is numerically singular or the
/// reconstruction residual exceeds 1e-6 |X|.
SpectralData eigen_decomposition(const Eigen::MatrixXcd& x);

/// min_{i != j} |lambda_i - lambda_j|. Throws ArgumentError for fewer than two
/// values.
double min_gap(std::span<const std::complex<double>> eigenvalues);

/// sqrt(n * sum_i O_ii), an upper bound for the eigenvector condition number.
double kappa_v_upper(std::span<const double> overlaps, Eigen::Index n);

/// [[0, X - z], [(X - z)^*, 0]].
Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& x, std::complex<double> z);

/// X - z I.
Eigen::MatrixXcd shifted(const Eigen::MatrixXcd& x, std::complex<double> z);

/// Roots of the monic cubic m^3 + c2 m^2 + c1 m + c0 (closed form).
std::array<std::complex<double>, 3> solve_cubic(std::complex<double> c2,
                                                std::complex<double> c1,
                                                std::complex<double> c0);

/// Limiting density of the singular values of X - z at x >= 0, from the
/// self-consistent equation m^3 + 2w m^2 + (w^2 + 1 - |z|^2) m + w = 0 at
/// w = x + 1e-9 i. Returns 0 outside the support.
double sc_sv_density(double abs_z, double x);

}  // namespace ginibre
