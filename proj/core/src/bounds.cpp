#include "ginibre/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ginibre/errors.hpp"

namespace ginibre {

double scale_c(double n, double delta) {
  if (!(n >= 1.0)) throw ArgumentError("scale_c: N must be at least 1");
  const double bulk = std::pow(n, -1.5);
  if (delta == 0.0) return bulk;
  return std::min(bulk, 1.0 / (n * n * std::abs(delta)));
}

double sv_tail_rhs(double x, double n, double eta, double c_star) {
  if (!(x >= 0.0)) throw ArgumentError("sv_tail_rhs: x must be non-negative");
  if (x == 0.0) return 0.0;
  const double root = std::sqrt(x);
  const double branch = eta == 0.0 ? root : std::min(root, x / (std::sqrt(n) * std::abs(eta)));
  return c_star * (1.0 + std::abs(std::log(x))) * x +
         c_star * std::exp(-0.5 * n * eta * eta) * branch;
}

double kappa_tail_rhs(double t, double n, double eta, double c_star) {
  if (!(t > 0.0)) throw ArgumentError("kappa_tail_rhs: t must be positive");
  const double ratio = n / t;
  const double branch =
      eta == 0.0 ? ratio : std::min(ratio, std::pow(n, 1.5) / (std::abs(eta) * t * t));
  return c_star * (std::abs(std::log(t)) * ratio * ratio +
                   std::exp(-0.5 * n * eta * eta) * branch + std::exp(-n));
}

double sst_rhs(double x, double gamma, Field field) {
  if (!(x >= 0.0)) throw ArgumentError("sst_rhs: x must be non-negative");
  if (!(gamma > 0.0)) throw ArgumentError("sst_rhs: gamma must be positive");
  return field == Field::real ? std::sqrt(x) / gamma : x / (gamma * gamma);
}

double overlap_bound_rhs(const Region& region, double n, double t) {
  if (!(n >= 1.0)) throw ArgumentError("overlap_bound_rhs: N must be at least 1");
  if (region.empty()) return 0.0;
  const double fatten = 1.0 / std::sqrt(n);
  const double h = fatten / 4.0;
  BoundingBox box = region.bounding_box(fatten);
  // The integrand vanishes outside the unit disk.
  box.x_min = std::max(box.x_min, -1.0);
  box.x_max = std::min(box.x_max, 1.0);
  box.y_min = std::max(box.y_min, -1.0);
  box.y_max = std::min(box.y_max, 1.0);
  if (box.x_min >= box.x_max || box.y_min >= box.y_max) return 0.0;

  const long nx = static_cast<long>(std::ceil((box.x_max - box.x_min) / h));
  const long ny = static_cast<long>(std::ceil((box.y_max - box.y_min) / h));
  double integral = 0.0;
  for (long i = 0; i < nx; ++i) {
    const double x = box.x_min + (i + 0.5) * h;
    for (long j = 0; j < ny; ++j) {
      const double y = box.y_min + (j + 0.5) * h;
      const double weight = 1.0 - x * x - y * y;
      if (weight <= 0.0) continue;
      if (region.distance({x, y}) <= fatten) integral += weight;
    }
  }
  integral *= h * h;
  return t * std::log(n) * n * n * integral;
}

double cg_error_bound(double kappa, double k) {
  if (!(kappa >= 1.0)) throw ArgumentError("cg_error_bound: kappa must be at least 1");
  if (!(k >= 0.0)) throw ArgumentError("cg_error_bound: k must be non-negative");
  const double root = std::sqrt(kappa);
  return 2.0 * std::pow((root - 1.0) / (root + 1.0), k);
}

}  // namespace ginibre
