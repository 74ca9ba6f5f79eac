#include "ginibre/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ginibre/errors.hpp"

namespace ginibre {

CcdfTable ccdf(std::span<const double> samples) {
  if (samples.empty()) throw ArgumentError("ccdf: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  CcdfTable table;
  table.sample_count = sorted.size();
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    table.thresholds.push_back(sorted[i]);
    table.ccdf.push_back(static_cast<double>(sorted.size() - i) / n);
  }
  return table;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y,
                          std::size_t min_points) {
  if (x.size() != y.size()) throw ArgumentError("fit_power_law: size mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const std::size_t m = lx.size();
  if (m < std::max<std::size_t>(min_points, 2)) {
    throw FitError("fit_power_law: only " + std::to_string(m) + " usable points");
  }
  const double md = static_cast<double>(m);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) mx += lx[i], my += ly[i];
  mx /= md;
  my /= md;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const auto [lo, hi] = std::minmax_element(lx.begin(), lx.end());
  if (*lo == *hi || !(sxx > 0.0)) throw FitError("fit_power_law: abscissae coincide");
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.amplitude = std::exp(my - fit.slope * mx);
  fit.points = m;
  return fit;
}

PowerLawFit fit_tail_exponent(const CcdfTable& table, double t_lo, double t_hi) {
  if (!(t_lo < t_hi)) throw ArgumentError("fit_tail_exponent: empty fit range");
  std::vector<double> t, p;
  for (std::size_t j = 0; j < table.thresholds.size(); ++j) {
    if (table.thresholds[j] >= t_lo && table.thresholds[j] <= t_hi) {
      t.push_back(table.thresholds[j]);
      p.push_back(table.ccdf[j]);
    }
  }
  return fit_power_law(t, p, 10);
}

std::vector<double> Histogram::density() const {
  std::vector<double> d(counts.size(), 0.0);
  if (total == 0) return d;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    d[k] = static_cast<double>(counts[k]) / (static_cast<double>(total) * width);
  }
  return d;
}

Histogram histogram(std::span<const double> samples, double lo, double hi, std::size_t bins) {
  if (bins < 1) throw ArgumentError("histogram: at least one bin required");
  if (!(hi > lo)) throw ArgumentError("histogram: empty range");
  Histogram h;
  h.lo = lo;
  h.width = (hi - lo) / static_cast<double>(bins);
  h.counts.assign(bins, 0);
  h.total = samples.size();
  for (double s : samples) {
    if (s < lo || s > hi) continue;
    auto k = static_cast<std::size_t>((s - lo) / h.width);
    if (k >= bins) k = bins - 1;
    ++h.counts[k];
  }
  return h;
}

double l1_distance(std::span<const double> p, std::span<const double> q, double width) {
  if (p.size() != q.size()) throw ArgumentError("l1_distance: size mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) sum += std::abs(p[k] - q[k]);
  return sum * width;
}

double quantile(std::vector<double> samples, double q) {
  if (samples.empty()) throw ArgumentError("quantile: empty sample");
  if (!(q > 0.0 && q <= 1.0)) throw ArgumentError("quantile: q must lie in (0, 1]");
  std::sort(samples.begin(), samples.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(samples.size())));
  return samples[std::max<std::size_t>(rank, 1) - 1];
}

MeanSummary summarize(std::span<const double> values) {
  MeanSummary s;
  s.count = values.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (values.empty()) {
    s.mean = s.sd = s.ci_half = nan;
    return s;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count < 2) {
    s.sd = s.ci_half = nan;
    return s;
  }
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(ss / static_cast<double>(s.count - 1));
  s.ci_half = 1.96 * s.sd / std::sqrt(static_cast<double>(s.count));
  return s;
}

}  // namespace ginibre
