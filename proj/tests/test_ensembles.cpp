#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ginibre/ensembles.hpp"
#include "ginibre/errors.hpp"
#include "ginibre/parallel.hpp"

using namespace ginibre;

namespace {

struct Moments {
  double mean_re = 0.0, mean_im = 0.0, second = 0.0;
  double count = 0.0;
};

Moments entry_moments(EnsembleKind kind, Eigen::Index n, int matrices) {
  Moments m;
  for (int s = 0; s < matrices; ++s) {
    const auto x = sample_matrix(n, kind, SeedSpec{123, static_cast<std::uint64_t>(s)});
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      m.mean_re += x.data()[k].real();
      m.mean_im += x.data()[k].imag();
      m.second += std::norm(x.data()[k]);
    }
    m.count += static_cast<double>(x.size());
  }
  m.mean_re /= m.count;
  m.mean_im /= m.count;
  m.second /= m.count;
  return m;
}

class EntryMoments : public ::testing::TestWithParam<EnsembleKind> {};

}  // namespace

TEST_P(EntryMoments, MeanZeroSecondMomentOneOverN) {
  const Eigen::Index n = 50;
  const auto m = entry_moments(GetParam(), n, 400);  // 10^6 entries
  const double sd_entry = 1.0 / std::sqrt(static_cast<double>(n));
  const double se = sd_entry / std::sqrt(m.count);
  EXPECT_NEAR(m.mean_re, 0.0, 4.0 * se);
  EXPECT_NEAR(m.mean_im, 0.0, 4.0 * se);
  // |x|^2 has variance at most 2/N^2 for all three laws
  EXPECT_NEAR(m.second, 1.0 / n, 4.0 * std::sqrt(2.0) / n / std::sqrt(m.count));
}

INSTANTIATE_TEST_SUITE_P(AllKinds, EntryMoments,
                         ::testing::Values(EnsembleKind::real_gaussian,
                                           EnsembleKind::complex_gaussian,
                                           EnsembleKind::bernoulli));

TEST(SampleMatrix, ScalarRealGaussianMoments) {
  double sum = 0.0, sum2 = 0.0;
  const int reps = 100000;
  for (int s = 0; s < reps; ++s) {
    const auto x = sample_matrix(1, EnsembleKind::real_gaussian,
                                 SeedSpec{static_cast<std::uint64_t>(s), 0});
    ASSERT_EQ(x(0, 0).imag(), 0.0);
    sum += x(0, 0).real();
    sum2 += x(0, 0).real() * x(0, 0).real();
  }
  const double mean = sum / reps;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sum2 / reps - mean * mean, 1.0, 0.02);
}

TEST(SampleMatrix, BernoulliSupport) {
  const double v = 1.0 / std::sqrt(2.0);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto x = sample_matrix(2, EnsembleKind::bernoulli, SeedSpec{s, 0});
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      const auto e = x.data()[k];
      EXPECT_EQ(e.imag(), 0.0);
      EXPECT_TRUE(e.real() == v || e.real() == -v) << e.real();
    }
  }
}

TEST(SampleMatrix, RealKindsHaveZeroImaginaryPart) {
  for (auto kind : {EnsembleKind::real_gaussian, EnsembleKind::bernoulli}) {
    const auto x = sample_matrix(30, kind, SeedSpec{5, 9});
    EXPECT_EQ(x.imag().cwiseAbs().maxCoeff(), 0.0);
  }
  const auto c = sample_matrix(30, EnsembleKind::complex_gaussian, SeedSpec{5, 9});
  EXPECT_GT(c.imag().cwiseAbs().maxCoeff(), 0.0);
}

TEST(SampleMatrix, BitIdenticalForIdenticalInputs) {
  const auto a = sample_matrix(40, EnsembleKind::complex_gaussian, SeedSpec{77, 3});
  const auto b = sample_matrix(40, EnsembleKind::complex_gaussian, SeedSpec{77, 3});
  EXPECT_TRUE(a == b);
  const auto c = sample_matrix(40, EnsembleKind::complex_gaussian, SeedSpec{77, 4});
  EXPECT_FALSE(a == c);
}

TEST(SampleMatrix, ZeroDimensionRejected) {
  EXPECT_THROW(sample_matrix(0, EnsembleKind::real_gaussian, SeedSpec{}), ArgumentError);
}

TEST(SampleMatrix, SpectralRadiusNearOneAtN500) {
  int inside = 0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    const auto x = sample_matrix(500, EnsembleKind::real_gaussian,
                                 SeedSpec{static_cast<std::uint64_t>(s), 0});
    const double rho = x.real().eigenvalues().cwiseAbs().maxCoeff();
    inside += rho >= 0.9 && rho <= 1.1;
  }
  EXPECT_GE(inside, 99);
}

TEST(SampleMatrix, WorkerCountDoesNotChangeSamples) {
  const std::size_t count = 16;
  auto collect = [&](int threads) {
    std::vector<Eigen::MatrixXcd> out(count);
    parallel_for(count, threads, [&](std::size_t k) {
      out[k] = sample_matrix(20, EnsembleKind::real_gaussian, SeedSpec{9, k});
    });
    return out;
  };
  const auto serial = collect(1);
  const auto parallel = collect(4);
  for (std::size_t k = 0; k < count; ++k) EXPECT_TRUE(serial[k] == parallel[k]);
}

TEST(EnsembleKindNames, ParseAndPrint) {
  EXPECT_EQ(parse_ensemble("real"), EnsembleKind::real_gaussian);
  EXPECT_EQ(parse_ensemble("real-gaussian"), EnsembleKind::real_gaussian);
  EXPECT_EQ(parse_ensemble("complex"), EnsembleKind::complex_gaussian);
  EXPECT_EQ(parse_ensemble("complex-gaussian"), EnsembleKind::complex_gaussian);
  EXPECT_EQ(parse_ensemble("bernoulli"), EnsembleKind::bernoulli);
  EXPECT_THROW(parse_ensemble("gaussian"), ArgumentError);
  for (auto kind : {EnsembleKind::real_gaussian, EnsembleKind::complex_gaussian,
                    EnsembleKind::bernoulli}) {
    EXPECT_EQ(parse_ensemble(to_string(kind)), kind);
  }
}
