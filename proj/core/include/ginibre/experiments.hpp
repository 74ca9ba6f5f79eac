#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ginibre/ensembles.hpp"
#include "ginibre/estimators.hpp"
#include "ginibre/table.hpp"

namespace ginibre {

/// Shared configuration of the Monte-Carlo drivers. Sample k always uses
/// stream k of `master_seed`, and the same matrix is reused for every shift.
struct ExperimentConfig {
  Eigen::Index n = 100;
  EnsembleKind ensemble = EnsembleKind::real_gaussian;
  std::vector<std::complex<double>> shifts{0.0};
  std::uint64_t samples = 1000;
  std::uint64_t master_seed = 0;
  int threads = 0;

  /// Histogram bins (svdensity).
  std::size_t bins = 40;
  /// Fit range; the experiment's default when unset
  /// (kappa-ccdf: t in [2N, 20N]; overlaps: t in [2, 100]).
  std::optional<std::pair<double, double>> fit_range;
  /// Conditioning constants for overlaps: (Im lambda)^2 >= far/N, <= near/N.
  double condition_far = 10.0;
  double condition_near = 0.1;
  /// Radial bin width for conditional overlap means.
  double bin_width = 0.05;
  /// sv-tail x-grid: logarithmic on [x_min, x_max] with points_per_decade.
  double x_min = 1e-4;
  double x_max = 1e2;
  int points_per_decade = 10;
  /// sv-tail small-x slope: fitted where the empirical CDF lies in this window.
  std::pair<double, double> slope_window{0.01, 0.1};
  /// CG tolerance and iteration cap (0 means 4N).
  double cg_tol = 1e-8;
  std::size_t cg_max_iter = 0;

  /// Output directory; nothing is written when empty.
  std::filesystem::path output_dir;
};

/// Throws ArgumentError for n < 1, samples < 1, no shifts, or an empty fit range.
void validate(const ExperimentConfig& config);

struct KappaCcdfResult {
  std::complex<double> z;
  CcdfTable table;
  std::optional<PowerLawFit> fit;  ///< of P(kappa >= t) over the fit range
};

struct SvTailResult {
  std::complex<double> z;
  double scale = 0.0;   ///< c(N, delta)
  std::vector<double> x;
  std::vector<double> cdf;    ///< P(lambda_1 <= x c(N, delta))
  std::vector<double> bound;  ///< sv_tail_rhs with the fitted constant
  double c_star = 0.0;        ///< smallest C with cdf <= bound on the grid
  std::optional<PowerLawFit> small_x_fit;
};

struct OverlapBin {
  double center = 0.0;
  MeanSummary summary;  ///< of O_ii / N; count 0 and NaN when empty
};

struct OverlapConditioning {
  std::string name;  ///< "far", "near" or "all"
  std::vector<OverlapBin> bins;
  std::optional<CcdfTable> ccdf;  ///< of O_ii / N; unset when no eigenvalue qualifies
  std::optional<PowerLawFit> fit;
};

struct OverlapResult {
  std::vector<OverlapConditioning> conditionings;  ///< far, near, all
  std::uint64_t used = 0;
  std::uint64_t discarded = 0;  ///< numerically defective samples

  const OverlapConditioning& get(const std::string& name) const;
};

struct CgBenchResult {
  std::complex<double> z;
  std::vector<double> iterations;  ///< per sample, max_iter when not converged
  std::uint64_t non_converged = 0;
  MeanSummary summary;
  double p99 = 0.0;
};

struct SvDensityResult {
  std::complex<double> z;
  Histogram histogram;
  std::vector<double> density;  ///< empirical, per bin
  std::vector<double> theory;   ///< bin average of sc_sv_density
  double l1 = 0.0;
};

template <class R>
struct Run {
  std::vector<R> results;
  std::vector<Artifact> artifacts;
};

Run<KappaCcdfResult> run_kappa_ccdf(const ExperimentConfig& config);
Run<SvTailResult> run_sv_tail(const ExperimentConfig& config);
/// Eigenvalue overlaps of X itself; shifts are ignored.
Run<OverlapResult> run_overlap_stats(const ExperimentConfig& config);
Run<CgBenchResult> run_cg_bench(const ExperimentConfig& config);
Run<SvDensityResult> run_svdensity(const ExperimentConfig& config);

/// "<experiment>-<ensemble>-<z>"
std::string artifact_stem(const std::string& experiment, EnsembleKind kind,
                          std::optional<std::complex<double>> z);

}  // namespace ginibre
