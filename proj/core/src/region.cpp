#include "ginibre/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ginibre {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool has_area(const Region::Shape& s) {
  return std::visit(overloaded{
                        [](const Disk& d) { return d.radius > 0.0; },
                        [](const Annulus& a) { return a.outer > a.inner && a.outer > 0.0; },
                        [](const Rectangle& r) { return r.x_max > r.x_min && r.y_max > r.y_min; },
                    },
                    s);
}

double shape_distance(const Region::Shape& s, std::complex<double> z) {
  return std::visit(
      overloaded{
          [&](const Disk& d) { return std::max(0.0, std::abs(z - d.center) - d.radius); },
          [&](const Annulus& a) {
            const double rho = std::abs(z - a.center);
            if (rho < a.inner) return a.inner - rho;
            if (rho > a.outer) return rho - a.outer;
            return 0.0;
          },
          [&](const Rectangle& r) {
            const double dx = std::max({r.x_min - z.real(), 0.0, z.real() - r.x_max});
            const double dy = std::max({r.y_min - z.imag(), 0.0, z.imag() - r.y_max});
            return std::hypot(dx, dy);
          },
      },
      s);
}

}  // namespace

bool Region::empty() const noexcept {
  return std::none_of(shapes_.begin(), shapes_.end(), has_area);
}

bool Region::contains(std::complex<double> z) const noexcept {
  return distance(z) == 0.0;
}

double Region::distance(std::complex<double> z) const noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : shapes_) {
    if (has_area(s)) best = std::min(best, shape_distance(s, z));
  }
  return best;
}

BoundingBox Region::bounding_box(double margin) const noexcept {
  BoundingBox box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  auto grow = [&](double x0, double x1, double y0, double y1) {
    box.x_min = std::min(box.x_min, x0 - margin);
    box.x_max = std::max(box.x_max, x1 + margin);
    box.y_min = std::min(box.y_min, y0 - margin);
    box.y_max = std::max(box.y_max, y1 + margin);
  };
  for (const auto& s : shapes_) {
    if (!has_area(s)) continue;
    std::visit(overloaded{
                   [&](const Disk& d) {
                     grow(d.center.real() - d.radius, d.center.real() + d.radius,
                          d.center.imag() - d.radius, d.center.imag() + d.radius);
                   },
                   [&](const Annulus& a) {
                     grow(a.center.real() - a.outer, a.center.real() + a.outer,
                          a.center.imag() - a.outer, a.center.imag() + a.outer);
                   },
                   [&](const Rectangle& r) { grow(r.x_min, r.x_max, r.y_min, r.y_max); },
               },
               s);
  }
  return box;
}

}  // namespace ginibre
