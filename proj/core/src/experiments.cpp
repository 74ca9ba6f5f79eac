#include "ginibre/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "ginibre/bounds.hpp"
#include "ginibre/complex_format.hpp"
#include "ginibre/errors.hpp"
#include "ginibre/parallel.hpp"
#include "ginibre/rng.hpp"
#include "ginibre/solvers.hpp"
#include "ginibre/spectral.hpp"

namespace ginibre {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::pair<double, double> fit_range_or(const ExperimentConfig& c, double lo, double hi) {
  return c.fit_range.value_or(std::make_pair(lo, hi));
}

RunMetadata base_metadata(const std::string& experiment, const ExperimentConfig& c,
                          std::optional<std::complex<double>> z) {
  RunMetadata m;
  m.experiment = experiment;
  m.master_seed = c.master_seed;
  m.rng_name = std::string(RandomStream::name());
  m.code_version = code_version();
  m.requested_samples = c.samples;
  m.used_samples = c.samples;
  m.config = {
      {"n", static_cast<std::int64_t>(c.n)},
      {"ensemble", std::string(to_string(c.ensemble))},
      {"samples", static_cast<std::int64_t>(c.samples)},
      {"precision", std::string("float64")},
  };
  if (z) m.config.emplace_back("z", format_complex(*z));
  return m;
}

Table ccdf_table(const CcdfTable& t) {
  Table table{{"t", "ccdf"}, {}};
  for (std::size_t j = 0; j < t.thresholds.size(); ++j) {
    table.add_row({t.thresholds[j], t.ccdf[j]});
  }
  return table;
}

template <class F>
std::optional<PowerLawFit> try_fit(F&& f) {
  try {
    return f();
  } catch (const FitError&) {
    return std::nullopt;
  }
}

void put_fit(MetaFields& fields, const std::string& prefix, const std::optional<PowerLawFit>& fit) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  fields.emplace_back(prefix + "slope", fit ? fit->slope : nan);
  fields.emplace_back(prefix + "amplitude", fit ? fit->amplitude : nan);
  fields.emplace_back(prefix + "points", static_cast<std::int64_t>(fit ? fit->points : 0));
}

template <class R>
Run<R> finish(Run<R> run, const ExperimentConfig& c, Clock::time_point start) {
  const double elapsed = seconds_since(start);
  for (auto& a : run.artifacts) a.meta.wall_time = elapsed;
  if (!c.output_dir.empty()) write_artifacts(run.artifacts, c.output_dir);
  return run;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  std::vector<double> x;
  const double step = 1.0 / per_decade;
  for (int j = 0;; ++j) {
    const double v = lo * std::pow(10.0, j * step);
    if (v > hi * (1.0 + 1e-12)) break;
    x.push_back(v);
  }
  return x;
}

}  // namespace

void validate(const ExperimentConfig& c) {
  if (c.n < 1) throw ArgumentError("experiment: n must be at least 1");
  if (c.samples < 1) throw ArgumentError("experiment: samples must be at least 1");
  if (c.shifts.empty()) throw ArgumentError("experiment: at least one shift required");
  if (c.fit_range && !(c.fit_range->first < c.fit_range->second)) {
    throw ArgumentError("experiment: fit range is empty");
  }
  if (!(c.slope_window.first < c.slope_window.second)) {
    throw ArgumentError("experiment: slope window is empty");
  }
  if (c.bins < 1) throw ArgumentError("experiment: bins must be at least 1");
  if (!(c.bin_width > 0.0)) throw ArgumentError("experiment: bin width must be positive");
  if (!(c.x_min > 0.0 && c.x_max > c.x_min) || c.points_per_decade < 1) {
    throw ArgumentError("experiment: invalid x grid");
  }
  if (!(c.cg_tol > 0.0)) throw ArgumentError("experiment: cg tolerance must be positive");
}

std::string artifact_stem(const std::string& experiment, EnsembleKind kind,
                          std::optional<std::complex<double>> z) {
  std::string stem = experiment + "-" + std::string(to_string(kind));
  if (z) stem += "-" + format_complex(*z);
  return stem;
}

const OverlapConditioning& OverlapResult::get(const std::string& name) const {
  for (const auto& c : conditionings) {
    if (c.name == name) return c;
  }
  throw ArgumentError("unknown conditioning '" + name + "'");
}

Run<KappaCcdfResult> run_kappa_ccdf(const ExperimentConfig& c) {
  validate(c);
  const auto start = Clock::now();
  const std::size_t shifts = c.shifts.size();
  std::vector<std::vector<double>> kappa(shifts, std::vector<double>(c.samples));
  parallel_for(c.samples, c.threads, [&](std::size_t k) {
    const Eigen::MatrixXcd x = sample_matrix(c.n, c.ensemble, SeedSpec{c.master_seed, k});
    for (std::size_t s = 0; s < shifts; ++s) kappa[s][k] = condition_number(shifted(x, c.shifts[s]));
  });

  const auto nd = static_cast<double>(c.n);
  const auto [lo, hi] = fit_range_or(c, 2.0 * nd, 20.0 * nd);
  Run<KappaCcdfResult> run;
  for (std::size_t s = 0; s < shifts; ++s) {
    KappaCcdfResult r;
    r.z = c.shifts[s];
    r.table = ccdf(kappa[s]);
    r.fit = try_fit([&] { return fit_tail_exponent(r.table, lo, hi); });

    RunMetadata meta = base_metadata("kappa-ccdf", c, r.z);
    meta.config.emplace_back("fit_range", std::vector<double>{lo, hi});
    put_fit(meta.results, "", r.fit);
    run.artifacts.push_back({artifact_stem("kappa-ccdf", c.ensemble, r.z), ccdf_table(r.table),
                             std::move(meta)});
    run.results.push_back(std::move(r));
  }
  return finish(std::move(run), c, start);
}

Run<SvTailResult> run_sv_tail(const ExperimentConfig& c) {
  validate(c);
  const auto start = Clock::now();
  const std::size_t shifts = c.shifts.size();
  // lambda_1(Y^z) = sigma_1(X - z)^2, the smallest eigenvalue of the Gram matrix.
  std::vector<std::vector<double>> lambda(shifts, std::vector<double>(c.samples));
  parallel_for(c.samples, c.threads, [&](std::size_t k) {
    const Eigen::MatrixXcd x = sample_matrix(c.n, c.ensemble, SeedSpec{c.master_seed, k});
    for (std::size_t s = 0; s < shifts; ++s) {
      lambda[s][k] = gram_eigenvalues(shifted(x, c.shifts[s]))(0);
    }
  });

  const auto nd = static_cast<double>(c.n);
  const std::vector<double> grid = log_grid(c.x_min, c.x_max, c.points_per_decade);
  Run<SvTailResult> run;
  for (std::size_t s = 0; s < shifts; ++s) {
    SvTailResult r;
    r.z = c.shifts[s];
    const ShiftParams shift(r.z);
    r.scale = scale_c(nd, shift.delta());
    std::vector<double> scaled = lambda[s];
    for (double& v : scaled) v /= r.scale;
    std::sort(scaled.begin(), scaled.end());

    r.x = grid;
    std::vector<double> unit_bound(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto below = std::upper_bound(scaled.begin(), scaled.end(), grid[j]) - scaled.begin();
      r.cdf.push_back(static_cast<double>(below) / static_cast<double>(c.samples));
      unit_bound[j] = sv_tail_rhs(grid[j], nd, shift.eta(), 1.0);
      if (r.cdf[j] > 0.0) r.c_star = std::max(r.c_star, r.cdf[j] / unit_bound[j]);
    }
    Table table{{"x", "cdf", "bound"}, {}};
    for (std::size_t j = 0; j < grid.size(); ++j) {
      r.bound.push_back(r.c_star * unit_bound[j]);
      table.add_row({r.x[j], r.cdf[j], r.bound[j]});
    }

    std::vector<double> fx, fy;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (r.cdf[j] >= c.slope_window.first && r.cdf[j] <= c.slope_window.second) {
        fx.push_back(r.x[j]);
        fy.push_back(r.cdf[j]);
      }
    }
    r.small_x_fit = try_fit([&] { return fit_power_law(fx, fy, 3); });

    RunMetadata meta = base_metadata("sv-tail", c, r.z);
    meta.config.emplace_back("x_range", std::vector<double>{c.x_min, c.x_max});
    meta.config.emplace_back("points_per_decade", static_cast<std::int64_t>(c.points_per_decade));
    meta.config.emplace_back("slope_window",
                             std::vector<double>{c.slope_window.first, c.slope_window.second});
    meta.results.emplace_back("scale_c", r.scale);
    meta.results.emplace_back("c_star", r.c_star);
    put_fit(meta.results, "small_x_", r.small_x_fit);
    run.artifacts.push_back({artifact_stem("sv-tail", c.ensemble, r.z), std::move(table),
                             std::move(meta)});
    run.results.push_back(std::move(r));
  }
  return finish(std::move(run), c, start);
}

Run<OverlapResult> run_overlap_stats(const ExperimentConfig& c) {
  validate(c);
  const auto start = Clock::now();
  struct Sample {
    bool defective = false;
    Eigen::VectorXcd eigenvalues;
    Eigen::VectorXd overlaps;
  };
  std::vector<Sample> samples(c.samples);
  parallel_for(c.samples, c.threads, [&](std::size_t k) {
    const Eigen::MatrixXcd x = sample_matrix(c.n, c.ensemble, SeedSpec{c.master_seed, k});
    try {
      SpectralData d = eigen_decomposition(x);
      samples[k].eigenvalues = std::move(d.eigenvalues);
      samples[k].overlaps = std::move(d.overlaps);
    } catch (const DefectiveMatrix&) {
      samples[k].defective = true;
    }
  });

  const auto nd = static_cast<double>(c.n);
  const char* names[] = {"far", "near", "all"};
  auto accepts = [&](int which, std::complex<double> lambda) {
    const double im2 = lambda.imag() * lambda.imag();
    if (which == 0) return im2 >= c.condition_far / nd;
    if (which == 1) return im2 <= c.condition_near / nd;
    return true;
  };

  OverlapResult result;
  std::size_t n_bins = 1;
  for (const auto& s : samples) {
    if (s.defective) {
      ++result.discarded;
      continue;
    }
    ++result.used;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
      const auto b = static_cast<std::size_t>(std::lround(std::abs(s.eigenvalues(i)) / c.bin_width));
      n_bins = std::max(n_bins, b + 1);
    }
  }

  const auto [lo, hi] = fit_range_or(c, 2.0, 100.0);
  Run<OverlapResult> run;
  for (int which = 0; which < 3; ++which) {
    std::vector<std::vector<double>> per_bin(n_bins);
    std::vector<double> all;
    for (const auto& s : samples) {
      if (s.defective) continue;
      for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        if (!accepts(which, s.eigenvalues(i))) continue;
        const double v = s.overlaps(i) / nd;
        const auto b = static_cast<std::size_t>(std::lround(std::abs(s.eigenvalues(i)) / c.bin_width));
        per_bin[b].push_back(v);
        all.push_back(v);
      }
    }
    OverlapConditioning cond;
    cond.name = names[which];
    Table means{{"absz", "mean", "ci_half", "count"}, {}};
    for (std::size_t b = 0; b < n_bins; ++b) {
      OverlapBin bin{static_cast<double>(b) * c.bin_width, summarize(per_bin[b])};
      means.add_row({bin.center, bin.summary.mean, bin.summary.ci_half,
                     static_cast<double>(bin.summary.count)});
      cond.bins.push_back(bin);
    }
    if (!all.empty()) {
      cond.ccdf = ccdf(all);
      cond.fit = try_fit([&] { return fit_tail_exponent(*cond.ccdf, lo, hi); });
    }

    RunMetadata meta = base_metadata("overlaps-mean-" + cond.name, c, std::nullopt);
    meta.config.emplace_back("condition_far", c.condition_far);
    meta.config.emplace_back("condition_near", c.condition_near);
    meta.config.emplace_back("bin_width", c.bin_width);
    meta.used_samples = result.used;
    meta.discarded_samples = result.discarded;
    RunMetadata ccdf_meta = meta;
    ccdf_meta.experiment = "overlaps-ccdf-" + cond.name;
    ccdf_meta.config.emplace_back("fit_range", std::vector<double>{lo, hi});
    put_fit(ccdf_meta.results, "", cond.fit);
    ccdf_meta.results.emplace_back("eigenvalues", static_cast<std::int64_t>(all.size()));

    run.artifacts.push_back({artifact_stem(meta.experiment, c.ensemble, std::nullopt),
                             std::move(means), std::move(meta)});
    run.artifacts.push_back(
        {artifact_stem(ccdf_meta.experiment, c.ensemble, std::nullopt),
         cond.ccdf ? ccdf_table(*cond.ccdf) : Table{{"t", "ccdf"}, {}}, std::move(ccdf_meta)});
    result.conditionings.push_back(std::move(cond));
  }
  run.results.push_back(std::move(result));
  return finish(std::move(run), c, start);
}

Run<CgBenchResult> run_cg_bench(const ExperimentConfig& c) {
  validate(c);
  const auto start = Clock::now();
  const std::size_t shifts = c.shifts.size();
  const std::size_t max_iter = c.cg_max_iter > 0 ? c.cg_max_iter : 4 * static_cast<std::size_t>(c.n);
  std::vector<std::vector<double>> iters(shifts, std::vector<double>(c.samples));
  std::vector<std::vector<char>> converged(shifts, std::vector<char>(c.samples));

  parallel_for(c.samples, c.threads, [&](std::size_t k) {
    RandomStream stream = spawn_stream(c.master_seed, k);
    const Eigen::MatrixXcd x = sample_matrix(c.n, c.ensemble, stream);
    Eigen::VectorXd b(c.n);
    for (Eigen::Index i = 0; i < c.n; ++i) b(i) = stream.uniform();
    b /= b.norm();

    for (std::size_t s = 0; s < shifts; ++s) {
      const std::complex<double> z = c.shifts[s];
      std::size_t count = 0;
      bool ok = false;
      if (is_real(c.ensemble) && z.imag() == 0.0) {
        const Eigen::MatrixXd a = x.real() - z.real() * Eigen::MatrixXd::Identity(c.n, c.n);
        auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
          return a.transpose() * (a * v);
        };
        const auto report = cg_solve<double>(apply, b, c.cg_tol, max_iter);
        count = report.iterations;
        ok = report.converged;
      } else {
        const Eigen::MatrixXcd a = shifted(x, z);
        auto apply = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
          return a.adjoint() * (a * v);
        };
        const Eigen::VectorXcd bc = b.cast<std::complex<double>>();
        const auto report = cg_solve<std::complex<double>>(apply, bc, c.cg_tol, max_iter);
        count = report.iterations;
        ok = report.converged;
      }
      iters[s][k] = static_cast<double>(ok ? count : max_iter);
      converged[s][k] = ok ? 1 : 0;
    }
  });

  Run<CgBenchResult> run;
  for (std::size_t s = 0; s < shifts; ++s) {
    CgBenchResult r;
    r.z = c.shifts[s];
    r.iterations = iters[s];
    for (char ok : converged[s]) r.non_converged += ok ? 0 : 1;
    r.summary = summarize(r.iterations);
    r.p99 = quantile(r.iterations, 0.99);

    const auto [min_it, max_it] = std::minmax_element(r.iterations.begin(), r.iterations.end());
    Table hist{{"iters", "freq"}, {}};
    std::vector<std::size_t> counts(static_cast<std::size_t>(*max_it - *min_it) + 1, 0);
    for (double v : r.iterations) ++counts[static_cast<std::size_t>(v - *min_it)];
    for (std::size_t j = 0; j < counts.size(); ++j) {
      hist.add_row({*min_it + static_cast<double>(j),
                    static_cast<double>(counts[j]) / static_cast<double>(c.samples)});
    }

    RunMetadata meta = base_metadata("cg-bench", c, r.z);
    meta.config.emplace_back("tol", c.cg_tol);
    meta.config.emplace_back("max_iter", static_cast<std::int64_t>(max_iter));
    meta.config.emplace_back("operator", std::string("(X-z)^*(X-z)"));
    meta.config.emplace_back("rhs", std::string("iid uniform [0,1), unit norm"));
    meta.results.emplace_back("mean", r.summary.mean);
    meta.results.emplace_back("sd", r.summary.sd);
    meta.results.emplace_back("p99", r.p99);
    meta.results.emplace_back("non_converged", static_cast<std::int64_t>(r.non_converged));
    RunMetadata ccdf_meta = meta;
    ccdf_meta.experiment = "cg-bench-ccdf";

    run.artifacts.push_back({artifact_stem("cg-bench", c.ensemble, r.z), std::move(hist),
                             std::move(meta)});
    run.artifacts.push_back({artifact_stem("cg-bench-ccdf", c.ensemble, r.z),
                             ccdf_table(ccdf(r.iterations)), std::move(ccdf_meta)});
    run.results.push_back(std::move(r));
  }
  return finish(std::move(run), c, start);
}

Run<SvDensityResult> run_svdensity(const ExperimentConfig& c) {
  validate(c);
  const auto start = Clock::now();
  const std::size_t shifts = c.shifts.size();
  const auto n = static_cast<std::size_t>(c.n);
  std::vector<std::vector<double>> values(shifts, std::vector<double>(c.samples * n));
  parallel_for(c.samples, c.threads, [&](std::size_t k) {
    const Eigen::MatrixXcd x = sample_matrix(c.n, c.ensemble, SeedSpec{c.master_seed, k});
    for (std::size_t s = 0; s < shifts; ++s) {
      const Eigen::VectorXd sv = singular_values(shifted(x, c.shifts[s]));
      std::copy(sv.data(), sv.data() + sv.size(), values[s].begin() + static_cast<long>(k * n));
    }
  });

  constexpr int kSubpoints = 16;
  Run<SvDensityResult> run;
  for (std::size_t s = 0; s < shifts; ++s) {
    SvDensityResult r;
    r.z = c.shifts[s];
    const double abs_z = std::abs(r.z);
    r.histogram = histogram(values[s], 0.0, 2.0 + abs_z, c.bins);
    r.density = r.histogram.density();
    Table table{{"x", "density", "theory"}, {}};
    for (std::size_t b = 0; b < c.bins; ++b) {
      const double left = r.histogram.lo + static_cast<double>(b) * r.histogram.width;
      double avg = 0.0;
      for (int q = 0; q < kSubpoints; ++q) {
        avg += sc_sv_density(abs_z, left + (q + 0.5) * r.histogram.width / kSubpoints);
      }
      r.theory.push_back(avg / kSubpoints);
      table.add_row({r.histogram.center(b), r.density[b], r.theory[b]});
    }
    r.l1 = l1_distance(r.density, r.theory, r.histogram.width);

    RunMetadata meta = base_metadata("svdensity", c, r.z);
    meta.config.emplace_back("bins", static_cast<std::int64_t>(c.bins));
    meta.config.emplace_back("range", std::vector<double>{0.0, 2.0 + abs_z});
    meta.results.emplace_back("l1", r.l1);
    run.artifacts.push_back({artifact_stem("svdensity", c.ensemble, r.z), std::move(table),
                             std::move(meta)});
    run.results.push_back(std::move(r));
  }
  return finish(std::move(run), c, start);
}

}  // namespace ginibre
