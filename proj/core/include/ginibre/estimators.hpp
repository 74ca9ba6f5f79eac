#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ginibre {

/// Empirical complementary CDF at the distinct sample values, ascending:
/// ccdf[j] = #{s >= thresholds[j]} / n.
struct CcdfTable {
  std::vector<double> thresholds;
  std::vector<double> ccdf;
  std::size_t sample_count = 0;
};

/// Throws ArgumentError for empty input.
CcdfTable ccdf(std::span<const double> samples);

struct PowerLawFit {
  double slope = 0.0;
  double amplitude = 0.0;  ///< y ~ amplitude * x^slope
  std::size_t points = 0;
};

/// Least squares of log y on log x over pairs with x, y > 0. Throws FitError
/// when fewer than `min_points` pairs qualify or all x coincide.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y,
                          std::size_t min_points = 2);

/// Power-law fit of the CCDF over thresholds in [t_lo, t_hi]. Throws
/// ArgumentError for an empty range and FitError for fewer than 10 points.
PowerLawFit fit_tail_exponent(const CcdfTable& table, double t_lo, double t_hi);

struct Histogram {
  double lo = 0.0;
  double width = 0.0;
  std::vector<std::size_t> counts;
  std::size_t total = 0;  ///< all samples, including those outside [lo, hi)

  double center(std::size_t bin) const { return lo + (static_cast<double>(bin) + 0.5) * width; }
  /// counts / (total * width)
  std::vector<double> density() const;
};

/// Equal-width bins on [lo, hi); the last bin also takes hi. Throws
/// ArgumentError for bins < 1 or hi <= lo.
Histogram histogram(std::span<const double> samples, double lo, double hi, std::size_t bins);

/// sum_k |p_k - q_k| * width
double l1_distance(std::span<const double> p, std::span<const double> q, double width);

/// Empirical quantile by the nearest-rank method; q in (0, 1].
double quantile(std::vector<double> samples, double q);

struct MeanSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;
  /// 1.96 sd / sqrt(count); NaN for count < 2
  double ci_half = 0.0;
};

/// Mean, sample standard deviation and normal-approximation 95% half width.
/// Empty input yields count 0 and NaN statistics.
MeanSummary summarize(std::span<const double> values);

}  // namespace ginibre
