#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace ginibre {

struct Disk {
  std::complex<double> center;
  double radius = 0.0;
};

struct Annulus {
  std::complex<double> center;
  double inner = 0.0;
  double outer = 0.0;
};

struct Rectangle {
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;
};

struct BoundingBox {
  double x_min, x_max, y_min, y_max;
};

/// Finite union of disks, annuli and axis-aligned rectangles in the plane.
class Region {
 public:
  using Shape = std::variant<Disk, Annulus, Rectangle>;

  Region() = default;
  explicit Region(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {}

  Region& add(Shape shape) {
    shapes_.push_back(shape);
    return *this;
  }

  /// True when the region has no shape of positive area.
  bool empty() const noexcept;

  bool contains(std::complex<double> z) const noexcept;

  /// Euclidean distance from z to the (closed) region; 0 inside.
  double distance(std::complex<double> z) const noexcept;

  /// Bounding box of the region grown by `margin`. Undefined for empty regions.
  BoundingBox bounding_box(double margin = 0.0) const noexcept;

  const std::vector<Shape>& shapes() const noexcept { return shapes_; }

 private:
  std::vector<Shape> shapes_;
};

}  // namespace ginibre
