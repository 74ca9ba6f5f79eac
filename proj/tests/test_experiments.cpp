#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ginibre/errors.hpp"
#include "ginibre/experiments.hpp"

using namespace ginibre;
using cd = std::complex<double>;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n = 12;
  c.samples = 40;
  c.master_seed = 9;
  c.threads = 1;
  return c;
}

template <class R>
std::vector<std::string> csvs(const Run<R>& run) {
  std::vector<std::string> out;
  for (const auto& a : run.artifacts) out.push_back(a.stem + "\n" + a.table.to_csv());
  return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("ginibre_lab_test_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Validate, RejectsBadConfigs) {
  auto c = small_config();
  EXPECT_NO_THROW(validate(c));
  c.samples = 0;
  EXPECT_THROW(validate(c), ArgumentError);
  c = small_config();
  c.shifts.clear();
  EXPECT_THROW(validate(c), ArgumentError);
  c = small_config();
  c.fit_range = std::pair{5.0, 5.0};
  EXPECT_THROW(validate(c), ArgumentError);
  c = small_config();
  c.n = 0;
  EXPECT_THROW(validate(c), ArgumentError);
}

TEST(ArtifactStem, Format) {
  EXPECT_EQ(artifact_stem("kappa-ccdf", EnsembleKind::real_gaussian, cd(0.5, 0.3)),
            "kappa-ccdf-real-0.5+0.3i");
  EXPECT_EQ(artifact_stem("overlaps-mean-far", EnsembleKind::bernoulli, std::nullopt),
            "overlaps-mean-far-bernoulli");
}

TEST(KappaCcdf, TableIsAValidCcdf) {
  auto c = small_config();
  c.shifts = {0.0, cd(0, 0.3)};
  const auto run = run_kappa_ccdf(c);
  ASSERT_EQ(run.results.size(), 2u);
  ASSERT_EQ(run.artifacts.size(), 2u);
  for (const auto& r : run.results) {
    EXPECT_EQ(r.table.sample_count, 40u);
    EXPECT_LE(r.table.ccdf.front(), 1.0);
    for (std::size_t j = 1; j < r.table.ccdf.size(); ++j) {
      EXPECT_LE(r.table.ccdf[j], r.table.ccdf[j - 1]);
      EXPECT_GE(r.table.thresholds[j], 1.0);
    }
  }
  EXPECT_EQ(run.artifacts[0].table.columns, (std::vector<std::string>{"t", "ccdf"}));
  EXPECT_EQ(run.artifacts[0].meta.requested_samples, 40u);
  EXPECT_EQ(run.artifacts[0].meta.rng_name, "philox4x32-10");
}

TEST(KappaCcdf, ThreadCountDoesNotChangeOutput) {
  auto c = small_config();
  c.ensemble = EnsembleKind::complex_gaussian;
  const auto serial = run_kappa_ccdf(c);
  c.threads = 3;
  EXPECT_EQ(csvs(serial), csvs(run_kappa_ccdf(c)));
}

TEST(SvTail, EnvelopeHoldsOnGrid) {
  auto c = small_config();
  c.samples = 200;
  c.shifts = {0.5, cd(0.5, 0.3)};
  c.x_min = 1e-2;
  c.x_max = 10;
  const auto run = run_sv_tail(c);
  for (const auto& r : run.results) {
    ASSERT_EQ(r.x.size(), r.cdf.size());
    EXPECT_EQ(r.x.size(), 31u);
    EXPECT_GT(r.c_star, 0.0);
    EXPECT_GT(r.scale, 0.0);
    for (std::size_t k = 0; k < r.x.size(); ++k) {
      EXPECT_LE(r.cdf[k], r.bound[k] * (1 + 1e-12));
      if (k > 0) {
        EXPECT_GE(r.cdf[k], r.cdf[k - 1]);
      }
    }
  }
}

TEST(OverlapStats, AccountingAndBins) {
  auto c = small_config();
  c.bin_width = 0.25;
  const auto run = run_overlap_stats(c);
  ASSERT_EQ(run.results.size(), 1u);
  const auto& r = run.results[0];
  EXPECT_EQ(r.used + r.discarded, 40u);
  std::size_t eigenvalues = 0;
  for (const auto& b : r.get("all").bins) {
    eigenvalues += b.summary.count;
    if (b.summary.count > 0) {
      EXPECT_GE(b.summary.mean, 1.0 / 12.0);
    } else {
      EXPECT_TRUE(std::isnan(b.summary.mean));
    }
  }
  EXPECT_EQ(eigenvalues, r.used * 12);
  EXPECT_THROW(r.get("middle"), ArgumentError);
  EXPECT_EQ(run.artifacts.size(), 6u);
  EXPECT_EQ(run.artifacts[0].table.columns,
            (std::vector<std::string>{"absz", "mean", "ci_half", "count"}));
}

TEST(CgBench, IterationsWithinCap) {
  auto c = small_config();
  c.shifts = {0.5, cd(0, 0.5)};
  const auto run = run_cg_bench(c);
  for (const auto& r : run.results) {
    ASSERT_EQ(r.iterations.size(), 40u);
    for (double k : r.iterations) {
      EXPECT_GE(k, 1.0);
      EXPECT_LE(k, 48.0);
    }
    EXPECT_GE(r.p99, r.summary.mean);
  }
  EXPECT_EQ(run.artifacts[0].table.columns, (std::vector<std::string>{"iters", "freq"}));
}

TEST(SvDensity, TheoryOverlayNormalized) {
  auto c = small_config();
  c.n = 200;
  c.samples = 2;
  c.shifts = {0.5};
  const auto run = run_svdensity(c);
  const auto& r = run.results[0];
  double mass = 0.0;
  for (double t : r.theory) mass += t * r.histogram.width;
  EXPECT_NEAR(mass, 1.0, 1e-2);
  EXPECT_LT(r.l1, 0.2);
  EXPECT_EQ(r.histogram.total, 400u);
}

TEST(SvDensity, LargeSingleSample) {
  auto c = small_config();
  c.n = 500;
  c.samples = 1;
  c.master_seed = 1;
  c.shifts = {0.0, 0.5, cd(0, 0.5)};
  const auto run = run_svdensity(c);
  EXPECT_LE(run.results[0].l1, 0.08);
  // strictly positive density at the origin inside the disk
  EXPECT_GT(run.results[1].density.front(), 0.2);
  const double phase = l1_distance(run.results[1].density, run.results[2].density,
                                   run.results[1].histogram.width);
  EXPECT_LE(phase, 0.1);
}

TEST(Artifacts, WrittenWithMetadata) {
  auto c = small_config();
  const auto dir = scratch_dir("artifacts");
  c.output_dir = dir;
  const auto run = run_kappa_ccdf(c);
  const auto paths = write_artifacts(run.artifacts, dir);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].filename(), "kappa-ccdf-real-0.csv");
  std::ifstream csv(paths[0]);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "t,ccdf");
  std::ifstream meta(dir / "kappa-ccdf-real-0.meta.json");
  std::stringstream buffer;
  buffer << meta.rdbuf();
  const std::string json = buffer.str();
  EXPECT_NE(json.find("\"master_seed\""), std::string::npos);
  EXPECT_NE(json.find("philox4x32-10"), std::string::npos);
  EXPECT_NE(json.find("\"code_version\""), std::string::npos);
  std::filesystem::remove_all(dir);
}
