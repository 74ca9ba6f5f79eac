#include <cmath>
#include <vector>

#include "ginibre/ensembles.hpp"
#include "ginibre/errors.hpp"
#include "ginibre/parallel.hpp"
#include "ginibre/spectral.hpp"
#include "ginibre/susy.hpp"

namespace ginibre {

McEstimate mc_trace_oracle(int n, std::complex<double> z, double e, std::uint64_t samples,
                           std::uint64_t seed, int threads) {
  if (n < 1) throw ArgumentError("mc_trace_oracle: N must be positive");
  if (!(e > 0.0)) throw ArgumentError("mc_trace_oracle: E must be positive");
  if (samples < 1) throw ArgumentError("mc_trace_oracle: at least one sample required");

  std::vector<double> values(samples);
  parallel_for(samples, threads, [&](std::size_t k) {
    const Eigen::MatrixXcd x = sample_matrix(n, EnsembleKind::real_gaussian, SeedSpec{seed, k});
    const Eigen::VectorXd lambda = gram_eigenvalues(shifted(x, z));
    double trace = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) trace += 1.0 / (lambda(i) + e);
    values[k] = trace;
  });

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(samples);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = samples > 1 ? std::sqrt(ss / static_cast<double>(samples - 1)) : 0.0;
  return {mean, sd / std::sqrt(static_cast<double>(samples))};
}

}  // namespace ginibre
