#include <cmath>
#include <numbers>

#include "ginibre/errors.hpp"
#include "ginibre/spectral.hpp"

namespace ginibre {

namespace {
constexpr double kRegularizer = 1e-9;
constexpr double kSupportTolerance = 1e-7;
}  // namespace

std::array<std::complex<double>, 3> solve_cubic(std::complex<double> c2,
                                                std::complex<double> c1,
                                                std::complex<double> c0) {
  using cd = std::complex<double>;
  // Depressed form y^3 + p y + q = 0 with m = y - c2/3.
  const cd shift = c2 / 3.0;
  const cd p = c1 - c2 * c2 / 3.0;
  const cd q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const cd disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // Take the larger of -q/2 +- sqrt(disc) to avoid cancellation.
  cd u3 = -q / 2.0 + disc;
  const cd alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;

  const cd omega(-0.5, std::sqrt(3.0) / 2.0);
  std::array<cd, 3> roots;
  if (std::abs(u3) == 0.0) {
    roots.fill(-shift);
    return roots;
  }
  cd u = std::pow(u3, 1.0 / 3.0);
  for (int k = 0; k < 3; ++k) {
    const cd v = -p / (3.0 * u);
    roots[k] = u + v - shift;
    u *= omega;
  }
  return roots;
}

double sc_sv_density(double abs_z, double x) {
  if (!(x >= 0.0)) throw ArgumentError("sc_sv_density: x must be non-negative");
  const std::complex<double> w(x, kRegularizer);
  const double z2 = abs_z * abs_z;
  const auto roots = solve_cubic(2.0 * w, w * w + 1.0 - z2, w);
  double im = roots[0].imag();
  for (const auto& r : roots) im = std::max(im, r.imag());
  if (im <= kSupportTolerance) return 0.0;
  return 2.0 / std::numbers::pi * im;
}

}  // namespace ginibre
