#pragma once

#include <vector>

namespace ginibre {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Throws ArgumentError for n < 1.
QuadratureRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [lo, hi].
QuadratureRule gauss_legendre(int n, double lo, double hi);

/// Composite rule: `rule` replicated on each consecutive panel [edges[k], edges[k+1]].
QuadratureRule composite(const QuadratureRule& rule, const std::vector<double>& edges);

}  // namespace ginibre
