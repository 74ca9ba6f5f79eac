#include "cli.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ginibre/bounds.hpp"
#include "ginibre/complex_format.hpp"
#include "ginibre/ensembles.hpp"
#include "ginibre/errors.hpp"
#include "ginibre/experiments.hpp"
#include "ginibre/parallel.hpp"
#include "ginibre/region.hpp"
#include "ginibre/susy.hpp"

namespace ginibre::cli {

namespace {

using json = nlohmann::json;

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw ArgumentError("cannot parse number '" + item + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double_full(v);
}

json fit_json(const std::optional<PowerLawFit>& fit) {
  if (!fit) return nullptr;
  return {{"slope", fit->slope}, {"amplitude", fit->amplitude}, {"points", fit->points}};
}

// Options shared by the Monte-Carlo subcommands.
struct CommonOptions {
  long n = 100;
  std::string ensemble = "real";
  std::string shifts = "0";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out = "out";
  std::string fit_range;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_shifts = true) {
  cmd->add_option("--n", o.n, "Matrix dimension")->capture_default_str();
  cmd->add_option("--ensemble", o.ensemble, "real, complex or bernoulli")->capture_default_str();
  if (with_shifts) {
    cmd->add_option("--z", o.shifts, "Comma-separated shifts, e.g. 0,0.5+0.3i")
        ->capture_default_str();
  }
  cmd->add_option("--samples", o.samples, "Number of sampled matrices")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker cap (0: GINIBRE_LAB_THREADS or all cores)")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
}

ExperimentConfig make_config(const CommonOptions& o) {
  ExperimentConfig c;
  c.n = o.n;
  c.ensemble = parse_ensemble(o.ensemble);
  c.shifts = parse_complex_list(o.shifts);
  c.samples = o.samples;
  c.master_seed = o.seed;
  c.threads = o.threads;
  c.output_dir = o.out;
  if (!o.fit_range.empty()) {
    const auto r = parse_double_list(o.fit_range);
    if (r.size() != 2) throw ArgumentError("--fit-range expects lo,hi");
    c.fit_range = std::make_pair(r[0], r[1]);
  }
  return c;
}

template <class R>
void print_artifacts(const Run<R>& run, const ExperimentConfig& c, std::ostream& out) {
  for (const auto& a : run.artifacts) {
    out << json{{"file", (c.output_dir / (a.stem + ".csv")).string()},
                {"master_seed", c.master_seed}}
               .dump()
        << '\n';
  }
}

// Cartesian product of swept parameters, emitted as CSV rows.
void sweep(const std::vector<std::vector<double>>& axes,
           const std::function<std::vector<double>(const std::vector<double>&)>& row,
           std::ostream& out) {
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<double> point(axes.size());
  while (true) {
    for (std::size_t k = 0; k < axes.size(); ++k) point[k] = axes[k][idx[k]];
    const std::vector<double> values = row(point);
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << (k ? "," : "") << format_double_full(values[k]);
    }
    out << '\n';
    std::size_t k = axes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (axes.empty()) return;
  }
}

Region parse_region(const std::vector<std::string>& disks, const std::vector<std::string>& annuli,
                    const std::vector<std::string>& rects) {
  Region region;
  for (const auto& d : disks) {
    const auto v = parse_double_list(d);
    if (v.size() != 3) throw ArgumentError("--disk expects cx,cy,r");
    region.add(Disk{{v[0], v[1]}, v[2]});
  }
  for (const auto& a : annuli) {
    const auto v = parse_double_list(a);
    if (v.size() != 4) throw ArgumentError("--annulus expects cx,cy,inner,outer");
    region.add(Annulus{{v[0], v[1]}, v[2], v[3]});
  }
  for (const auto& r : rects) {
    const auto v = parse_double_list(r);
    if (v.size() != 4) throw ArgumentError("--rect expects xmin,xmax,ymin,ymax");
    region.add(Rectangle{v[0], v[1], v[2], v[3]});
  }
  return region;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shifted Ginibre matrices: sampling, spectral statistics, bounds and experiments",
               "ginibre-lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", code_version());

  std::function<void()> action;

  // sample
  CommonOptions sample_opts;
  std::uint64_t stream_index = 0;
  auto* sample = app.add_subcommand("sample", "Print one sampled matrix as CSV of a+bi entries");
  sample->add_option("--n", sample_opts.n, "Matrix dimension")->capture_default_str();
  sample->add_option("--ensemble", sample_opts.ensemble, "real, complex or bernoulli")
      ->capture_default_str();
  sample->add_option("--seed", sample_opts.seed, "Master seed")->capture_default_str();
  sample->add_option("--stream", stream_index, "Stream index")->capture_default_str();
  sample->callback([&] {
    action = [&] {
      const auto m = sample_matrix(sample_opts.n, parse_ensemble(sample_opts.ensemble),
                                   SeedSpec{sample_opts.seed, stream_index});
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << format_complex(m(i, j));
        out << '\n';
      }
    };
  });

  // svdensity
  CommonOptions sv_opts;
  sv_opts.n = 500;
  sv_opts.samples = 1;
  std::size_t bins = 40;
  auto* svd = app.add_subcommand("svdensity", "Singular-value histogram of X - z with theory overlay");
  add_common(svd, sv_opts);
  svd->add_option("--bins", bins, "Histogram bins on [0, 2 + |z|]")->capture_default_str();
  svd->callback([&] {
    action = [&] {
      ExperimentConfig c = make_config(sv_opts);
      c.bins = bins;
      const auto run = run_svdensity(c);
      print_artifacts(run, c, out);
      for (const auto& r : run.results) {
        out << json{{"z", format_complex(r.z)}, {"l1", number(r.l1)}}.dump() << '\n';
      }
    };
  });

  // kappa-ccdf
  CommonOptions kappa_opts;
  kappa_opts.samples = 10000;
  auto* kappa = app.add_subcommand("kappa-ccdf", "CCDF of the condition number of X - z");
  add_common(kappa, kappa_opts);
  kappa->add_option("--fit-range", kappa_opts.fit_range, "Fit range lo,hi in t (default 2N,20N)");
  kappa->callback([&] {
    action = [&] {
      const ExperimentConfig c = make_config(kappa_opts);
      const auto run = run_kappa_ccdf(c);
      print_artifacts(run, c, out);
      for (const auto& r : run.results) {
        out << json{{"z", format_complex(r.z)}, {"fit", fit_json(r.fit)}}.dump() << '\n';
      }
    };
  });

  // sv-tail
  CommonOptions tail_opts;
  tail_opts.samples = 10000;
  double x_min = 1e-4, x_max = 1e2;
  int per_decade = 10;
  auto* tail = app.add_subcommand("sv-tail", "CDF of lambda_1(Y^z) / c(N, delta) with bound overlay");
  add_common(tail, tail_opts);
  tail->add_option("--x-min", x_min, "Smallest grid point")->capture_default_str();
  tail->add_option("--x-max", x_max, "Largest grid point")->capture_default_str();
  tail->add_option("--per-decade", per_decade, "Grid points per decade")->capture_default_str();
  tail->callback([&] {
    action = [&] {
      ExperimentConfig c = make_config(tail_opts);
      c.x_min = x_min;
      c.x_max = x_max;
      c.points_per_decade = per_decade;
      const auto run = run_sv_tail(c);
      print_artifacts(run, c, out);
      for (const auto& r : run.results) {
        out << json{{"z", format_complex(r.z)},
                    {"scale_c", r.scale},
                    {"c_star", r.c_star},
                    {"small_x_fit", fit_json(r.small_x_fit)}}
                   .dump()
            << '\n';
      }
    };
  });

  // overlaps
  CommonOptions ov_opts;
  ov_opts.samples = 5000;
  double far = 10.0, near = 0.1, bin_width = 0.05;
  auto* ov = app.add_subcommand("overlaps", "Eigenvector overlap statistics of X");
  add_common(ov, ov_opts, false);
  ov->add_option("--far", far, "Far-from-axis condition (Im lambda)^2 >= far/N")->capture_default_str();
  ov->add_option("--near", near, "Near-axis condition (Im lambda)^2 <= near/N")->capture_default_str();
  ov->add_option("--bin-width", bin_width, "Radial bin width")->capture_default_str();
  ov->add_option("--fit-range", ov_opts.fit_range, "CCDF fit range lo,hi (default 2,100)");
  ov->callback([&] {
    action = [&] {
      ExperimentConfig c = make_config(ov_opts);
      c.condition_far = far;
      c.condition_near = near;
      c.bin_width = bin_width;
      const auto run = run_overlap_stats(c);
      print_artifacts(run, c, out);
      const auto& r = run.results.front();
      json summary{{"used", r.used}, {"discarded", r.discarded}};
      for (const auto& cond : r.conditionings) summary["fit_" + cond.name] = fit_json(cond.fit);
      out << summary.dump() << '\n';
    };
  });

  // cg-bench
  CommonOptions cg_opts;
  double tol = 1e-8;
  std::size_t max_iter = 0;
  auto* cg = app.add_subcommand("cg-bench", "CG iteration counts for (X - z)^*(X - z) x = b");
  add_common(cg, cg_opts);
  cg->add_option("--tol", tol, "Relative residual tolerance")->capture_default_str();
  cg->add_option("--max-iter", max_iter, "Iteration cap (0: 4N)")->capture_default_str();
  cg->callback([&] {
    action = [&] {
      ExperimentConfig c = make_config(cg_opts);
      c.cg_tol = tol;
      c.cg_max_iter = max_iter;
      const auto run = run_cg_bench(c);
      print_artifacts(run, c, out);
      for (const auto& r : run.results) {
        out << json{{"z", format_complex(r.z)},
                    {"mean", number(r.summary.mean)},
                    {"sd", number(r.summary.sd)},
                    {"p99", r.p99},
                    {"non_converged", r.non_converged}}
                   .dump()
            << '\n';
      }
    };
  });

  // susy-eval
  int susy_n = 4;
  std::string susy_z = "0";
  double susy_e = 0.1;
  std::string contour = "circle";
  double radius = 0.5, z_star = 1.0, susy_tol = 1e-8;
  int nodes = 64, n_a = 32, n_tau = 40;
  double a_max = 0.0;
  std::string form = "linear";
  std::uint64_t verify_mc = 0, susy_seed = 0;
  int susy_threads = 0;
  auto* susy = app.add_subcommand("susy-eval", "Evaluate the triple-integral resolvent trace");
  susy->add_option("--n", susy_n, "Matrix dimension (>= 2)")->capture_default_str();
  susy->add_option("--z", susy_z, "Shift")->capture_default_str();
  susy->add_option("--E", susy_e, "Resolvent shift E > 0")->capture_default_str();
  susy->add_option("--contour", contour, "circle or gamma-star")
      ->check(CLI::IsMember({"circle", "gamma-star"}))
      ->capture_default_str();
  susy->add_option("--radius", radius, "Circle radius")->capture_default_str();
  susy->add_option("--zstar", z_star, "|z_*| for gamma-star (>= 2/3)")->capture_default_str();
  susy->add_option("--nodes", nodes, "Contour nodes")->capture_default_str();
  susy->add_option("--n-a", n_a, "Gauss-Legendre nodes per a-panel")->capture_default_str();
  susy->add_option("--n-tau", n_tau, "Gauss-Legendre nodes in sqrt(tau)")->capture_default_str();
  susy->add_option("--a-max", a_max, "a truncation (0: adaptive)")->capture_default_str();
  susy->add_option("--tol", susy_tol, "Contour-independence tolerance")->capture_default_str();
  susy->add_option("--form", form, "G_N variant: linear or cubic power in the p220 term")
      ->check(CLI::IsMember({"linear", "cubic"}))
      ->capture_default_str();
  susy->add_option("--verify-mc", verify_mc, "Monte-Carlo samples for comparison (0: skip)")
      ->capture_default_str();
  susy->add_option("--seed", susy_seed, "Master seed for --verify-mc")->capture_default_str();
  susy->add_option("--threads", susy_threads, "Worker cap")->capture_default_str();
  susy->callback([&] {
    action = [&] {
      const SusyParams p{susy_n, parse_complex(susy_z), susy_e};
      QuadSpec q;
      q.contour = contour == "circle" ? ContourSpec::circle(radius, nodes)
                                      : ContourSpec::gamma_star(z_star, nodes);
      if (a_max > 0.0) q.a_max = a_max;
      q.n_a = n_a;
      q.n_tau = n_tau;
      q.tol = susy_tol;
      q.form = form == "linear" ? GForm::linear_p220 : GForm::cubic_p220;
      q.threads = susy_threads;
      const SusyResult r = susy_trace(p, q);
      json j{{"N", susy_n},
             {"z", format_complex(p.z)},
             {"E", susy_e},
             {"value", r.value},
             {"im_residual", number(r.diagnostics.im_residual)},
             {"contour_delta", number(r.diagnostics.contour_delta)},
             {"tail_estimate", number(r.diagnostics.tail_estimate)},
             {"a_max", r.diagnostics.a_max},
             {"master_seed", susy_seed}};
      if (verify_mc > 0) {
        const McEstimate mc = mc_trace_oracle(susy_n, p.z, susy_e, verify_mc, susy_seed, susy_threads);
        j["mc_estimate"] = mc.estimate;
        j["mc_stderr"] = mc.standard_error;
        j["mc_samples"] = verify_mc;
        j["z_score"] = number((r.value - mc.estimate) / mc.standard_error);
      } else {
        j["mc_estimate"] = nullptr;
        j["mc_stderr"] = nullptr;
      }
      out << j.dump() << '\n';
    };
  });

  // bounds
  std::string table = "sv-tail";
  std::string b_n = "100", b_eta = "0", b_x = "0.01", b_cstar = "1", b_t = "1000", b_delta = "1",
              b_gamma = "1", b_kappa = "9", b_k = "10", b_absz = "0";
  std::string field = "real";
  std::vector<std::string> disks, annuli, rects;
  auto* bounds = app.add_subcommand("bounds", "Print closed-form bound values as CSV (comma lists sweep)");
  bounds->add_option("--table", table, "sv-tail, kappa-tail, scale-c, sst, cg or overlap")
      ->check(CLI::IsMember({"sv-tail", "kappa-tail", "scale-c", "sst", "cg", "overlap"}))
      ->capture_default_str();
  bounds->add_option("--n", b_n, "Dimension N")->capture_default_str();
  bounds->add_option("--eta", b_eta, "Im z")->capture_default_str();
  bounds->add_option("--x", b_x, "Rescaled eigenvalue x (sv-tail, sst)")->capture_default_str();
  bounds->add_option("--cstar", b_cstar, "Constant C_*")->capture_default_str();
  bounds->add_option("--t", b_t, "Threshold t (kappa-tail, overlap)")->capture_default_str();
  bounds->add_option("--delta", b_delta, "1 - |z|^2 (scale-c)")->capture_default_str();
  bounds->add_option("--absz", b_absz, "|z|, flags kappa-tail rows outside |z| < 0.99")
      ->capture_default_str();
  bounds->add_option("--gamma", b_gamma, "Coupling gamma (sst)")->capture_default_str();
  bounds->add_option("--field", field, "real or complex (sst)")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  bounds->add_option("--kappa", b_kappa, "Condition number (cg)")->capture_default_str();
  bounds->add_option("--k", b_k, "Iteration (cg)")->capture_default_str();
  bounds->add_option("--disk", disks, "Region disk cx,cy,r (repeatable)");
  bounds->add_option("--annulus", annuli, "Region annulus cx,cy,inner,outer (repeatable)");
  bounds->add_option("--rect", rects, "Region rectangle xmin,xmax,ymin,ymax (repeatable)");
  bounds->callback([&] {
    action = [&] {
      const auto L = parse_double_list;
      if (table == "sv-tail") {
        out << "x,n,eta,cstar,sv_tail_rhs\n";
        sweep({L(b_x), L(b_n), L(b_eta), L(b_cstar)},
              [](const std::vector<double>& v) -> std::vector<double> {
                return {v[0], v[1], v[2], v[3], sv_tail_rhs(v[0], v[1], v[2], v[3])};
              },
              out);
      } else if (table == "kappa-tail") {
        out << "t,n,eta,cstar,absz,kappa_tail_rhs,in_domain\n";
        sweep({L(b_t), L(b_n), L(b_eta), L(b_cstar), L(b_absz)},
              [](const std::vector<double>& v) -> std::vector<double> {
                return {v[0], v[1], v[2], v[3], v[4], kappa_tail_rhs(v[0], v[1], v[2], v[3]),
                        kappa_bound_applies(v[4]) ? 1.0 : 0.0};
              },
              out);
      } else if (table == "scale-c") {
        out << "n,delta,c\n";
        sweep({L(b_n), L(b_delta)},
              [](const std::vector<double>& v) -> std::vector<double> {
                return {v[0], v[1], scale_c(v[0], v[1])};
              },
              out);
      } else if (table == "sst") {
        const Field f = field == "real" ? Field::real : Field::complex;
        out << "x,gamma,sst_rhs\n";
        sweep({L(b_x), L(b_gamma)},
              [f](const std::vector<double>& v) -> std::vector<double> {
                return {v[0], v[1], sst_rhs(v[0], v[1], f)};
              },
              out);
      } else if (table == "cg") {
        out << "kappa,k,cg_error_bound\n";
        sweep({L(b_kappa), L(b_k)},
              [](const std::vector<double>& v) -> std::vector<double> {
                return {v[0], v[1], cg_error_bound(v[0], v[1])};
              },
              out);
      } else {
        const Region region = parse_region(disks, annuli, rects);
        out << "n,t,overlap_bound_rhs\n";
        sweep({L(b_n), L(b_t)},
              [&region](const std::vector<double>& v) -> std::vector<double> {
                return {v[0], v[1], overlap_bound_rhs(region, v[0], v[1])};
              },
              out);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const ArgumentError& e) {
    const auto chosen = app.get_subcommands();
    err << "error: " << e.what() << '\n' << (chosen.empty() ? app.help() : chosen.front()->help());
    return 2;
  } catch (const AccuracyError& e) {
    err << json{{"error", "accuracy"},
                {"message", e.what()},
                {"first", number(e.first())},
                {"second", number(e.second())}}
               .dump()
        << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", "runtime"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace ginibre::cli
