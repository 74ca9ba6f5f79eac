#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace ginibre {

// Triple-integral representation of E Tr[(Y^z + E)^{-1}], Y^z = (X - z)(X - z)^*,
// for real Ginibre X:
//
//   N/(4 pi i) \oint d xi \int_0^inf da \int_0^1 d tau
//       xi^2 a tau^{-1/2} e^{N [f(xi) - g(a, tau, eta)]} G_N(a, tau, xi)
//
// with eta = Im z, delta = 1 - |z|^2.

/// f(xi) = E xi + log(1 + xi) - log xi - |z|^2 / (1 + xi), principal branch.
/// Throws DomainError at xi = 0 or xi = -1.
std::complex<double> eval_f(std::complex<double> xi, double e, double z2);

/// g(a, tau, eta) = E a + log(1 + 2a + a^2 tau)/2 - log a - log(tau)/2
///                  - (|z|^2 (1 + a) - 2 eta^2 a^2 (1 - tau)) / (1 + 2a + a^2 tau).
/// Throws DomainError for a <= 0 or tau <= 0.
double eval_g(double a, double tau, double eta, double e, double z2);

enum class Poly { p200, p100, p220, p120, p201, p101, p221, p202 };

std::complex<double> eval_poly(Poly index, double a, double tau, std::complex<double> xi);

/// Power of (xi + 1) in the denominator of the N^2 eta^2 p220 term of G_N.
/// The cubic variant disagrees with direct sampling for complex z once
/// N >= 3; the linear one matches and is the default.
enum class GForm { linear_p220, cubic_p220 };

/// G_N(a, tau, xi) with eta and delta supplied independently.
/// Throws DomainError at xi in {0, -1} or a, tau <= 0.
std::complex<double> eval_G(double a, double tau, std::complex<double> xi, int n, double eta,
                            double delta, GForm form = GForm::linear_p220);

/// e^{N [f(xi) - g(a, tau, eta)]} computed as
/// (1 + xi)^N xi^{-N} e^{N E xi - N |z|^2 / (1 + xi)} e^{-N g}, which is
/// single-valued in xi for integer N >= 1.
std::complex<double> exp_weight(std::complex<double> xi, double a, double tau, int n, double e,
                                double z2, double eta);

struct ContourSpec {
  enum class Kind { circle, gamma_star };
  Kind kind = Kind::circle;
  /// Radius for `circle`; |z_*| for `gamma_star`.
  double parameter = 0.5;
  int nodes = 64;

  static ContourSpec circle(double radius, int nodes = 64) {
    return {Kind::circle, radius, nodes};
  }
  /// Vertical segment at Re xi = -2/3 closed by the arc of radius |z_*|
  /// through the positive real axis. Requires |z_*| >= 2/3.
  static ContourSpec gamma_star(double z_star_modulus, int nodes = 128) {
    return {Kind::gamma_star, z_star_modulus, nodes};
  }
};

struct ContourNode {
  std::complex<double> node;
  std::complex<double> weight;  ///< includes d xi, so sum w_k h(xi_k) ~ \oint h
};

/// Counter-clockwise discretization: trapezoidal rule on circles, composite
/// Gauss-Legendre on the two pieces of gamma_star. Throws ArgumentError for
/// circle radii outside (0, 1), |z_*| < 2/3 or fewer than 8 nodes.
std::vector<ContourNode> build_contour(const ContourSpec& spec);

/// psi = arccos(2 / (3 |z_*|)).
double gamma_star_psi(double z_star_modulus);

struct QuadSpec {
  ContourSpec contour = ContourSpec::circle(0.5, 64);
  /// Upper limit of the a-integral; chosen adaptively when unset.
  std::optional<double> a_max;
  int n_a = 32;     ///< Gauss-Legendre nodes per a-panel
  int n_tau = 40;   ///< Gauss-Legendre nodes in u = sqrt(tau)
  double tol = 1e-8;
  bool check_contour = true;  ///< compute the r = 0.4 vs r = 0.6 delta
  GForm form = GForm::linear_p220;
  int threads = 0;
};

struct SusyParams {
  int n = 2;
  std::complex<double> z;
  double e = 1.0;
};

struct SusyDiagnostics {
  std::complex<double> raw;      ///< full complex quadrature value
  double im_residual = 0.0;      ///< |Im raw| / |Re raw|
  double contour_delta = 0.0;    ///< relative difference of r = 0.4 and r = 0.6; NaN if unchecked
  double tail_estimate = 0.0;    ///< envelope at a_max relative to its peak
  double a_max = 0.0;
  std::uint64_t evaluations = 0;
};

struct SusyResult {
  double value = 0.0;
  SusyDiagnostics diagnostics;
};

/// Quadrature value of the representation. Throws ArgumentError for E <= 0,
/// N < 2 or invalid QuadSpec, and AccuracyError (carrying both values) when
/// the contour delta exceeds quad.tol.
SusyResult susy_trace(const SusyParams& params, const QuadSpec& quad = {});

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Mean of Tr[(Y^z + E)^{-1}] over `samples` real Ginibre draws, sample k
/// using stream k of `seed`. The standard error is sd / sqrt(samples).
McEstimate mc_trace_oracle(int n, std::complex<double> z, double e, std::uint64_t samples,
                           std::uint64_t seed, int threads = 0);

}  // namespace ginibre
