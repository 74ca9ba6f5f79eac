#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "ginibre/region.hpp"

namespace ginibre {

enum class AreaRounding {
  /// area = #{grid points z in region : sigma_1(X - z) <= eps} * step^2
  grid_points,
  /// Counts every grid cell that may meet both the region and the
  /// pseudospectrum: cell centers within step/sqrt(2) of the region with
  /// sigma_1(X - center) <= eps + step/sqrt(2). Never underestimates the area
  /// of {z in region : sigma_1(X - z) <= eps}.
  cell_upper,
};

enum class Pruning {
  /// Evaluate sigma_1 at every grid point.
  none,
  /// Quadtree that discards blocks using the 1-Lipschitz property of
  /// z -> sigma_1(X - z) with an exact SVD at each block center.
  lipschitz,
  /// Same quadtree, with sigma_1 at block centers bounded from below through
  /// the Frobenius norm of V (D - z)^{-1} V^{-1}. Falls back to `lipschitz`
  /// when X is not numerically diagonalizable.
  resolvent,
};

struct PseudospectrumOptions {
  AreaRounding rounding = AreaRounding::grid_points;
  Pruning pruning = Pruning::resolvent;
  int block_levels = 6;  ///< top-level quadtree blocks span 2^levels cells
};

struct PseudospectrumStats {
  double area = 0.0;
  std::size_t counted = 0;      ///< grid points (or cells) counted
  std::size_t evaluations = 0;  ///< exact SVDs performed
  bool used_resolvent = false;
};

/// Grid-counting area of the eps-pseudospectrum {z : sigma_1(X - z) <= eps}
/// restricted to `region`. The grid is anchored at the lower-left corner of
/// the region's bounding box. Throws ArgumentError for eps <= 0 or step <= 0;
/// an empty region yields 0.
PseudospectrumStats pseudospectrum_stats(const Eigen::MatrixXcd& x, double epsilon,
                                         const Region& region, double grid_step,
                                         const PseudospectrumOptions& options = {});

inline double pseudospectrum_area(const Eigen::MatrixXcd& x, double epsilon, const Region& region,
                                  double grid_step, const PseudospectrumOptions& options = {}) {
  return pseudospectrum_stats(x, epsilon, region, grid_step, options).area;
}

}  // namespace ginibre
