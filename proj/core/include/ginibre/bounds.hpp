#pragma once

#include <complex>

#include "ginibre/region.hpp"

namespace ginibre {

/// Natural scale of the smallest eigenvalue of Y^z:
/// c(N, delta) = min(N^{-3/2}, 1 / (N^2 |delta|)), equal to N^{-3/2} at delta = 0.
double scale_c(double n, double delta);

/// Tail bound for P(lambda_1(Y^z) <= x c(N, delta)):
/// C (1 + |log x|) x + C e^{-N eta^2 / 2} min(sqrt(x), x / (sqrt(N) |eta|)).
/// Returns 0 at x = 0. Throws ArgumentError for x < 0.
double sv_tail_rhs(double x, double n, double eta, double c_star);

/// Condition number tail bound for P(kappa(X - z) >= t):
/// C [ |log t| (N/t)^2 + e^{-N eta^2 / 2} min(N/t, N^{3/2} / (|eta| t^2)) + e^{-N} ].
/// Only established for |z| < 0.99; see kappa_bound_applies.
double kappa_tail_rhs(double t, double n, double eta, double c_star);

/// Whether kappa_tail_rhs is a valid bound at shift z.
inline bool kappa_bound_applies(std::complex<double> z) { return std::abs(z) < 0.99; }

enum class Field { real, complex };

/// Smoothed-analysis tail with the constant normalized to 1:
/// sqrt(x) / gamma over the reals, x / gamma^2 over the complex numbers.
double sst_rhs(double x, double gamma, Field field);

/// t log(N) N^2 times the integral of (1 - |z|^2)_+ over the region fattened
/// by N^{-1/2}. Midpoint rule with step N^{-1/2} / 4. Empty regions give 0.
double overlap_bound_rhs(const Region& region, double n, double t);

/// 2 ((sqrt(kappa) - 1) / (sqrt(kappa) + 1))^k. Throws ArgumentError for kappa < 1.
double cg_error_bound(double kappa, double k);

}  // namespace ginibre
