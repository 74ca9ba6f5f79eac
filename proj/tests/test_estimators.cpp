#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ginibre/errors.hpp"
#include "ginibre/estimators.hpp"

using namespace ginibre;

TEST(Ccdf, SmallExamples) {
  const std::vector<double> s{3.0, 1.0, 2.0};
  const auto t = ccdf(s);
  ASSERT_EQ(t.thresholds, (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_DOUBLE_EQ(t.ccdf[0], 1.0);
  EXPECT_DOUBLE_EQ(t.ccdf[1], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.ccdf[2], 1.0 / 3.0);
  EXPECT_EQ(t.sample_count, 3u);

  const std::vector<double> c{5.0, 5.0, 5.0};
  const auto tc = ccdf(c);
  ASSERT_EQ(tc.thresholds.size(), 1u);
  EXPECT_DOUBLE_EQ(tc.ccdf[0], 1.0);

  EXPECT_THROW(ccdf(std::vector<double>{}), ArgumentError);
}

TEST(Ccdf, MatchesBruteForceCounting) {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> u(0, 300);  // ties included
  std::vector<double> s(1000);
  for (auto& v : s) v = u(gen) / 10.0;
  const auto t = ccdf(s);
  for (std::size_t j = 0; j < t.thresholds.size(); ++j) {
    std::size_t count = 0;
    for (double v : s) count += v >= t.thresholds[j];
    EXPECT_DOUBLE_EQ(t.ccdf[j], static_cast<double>(count) / 1000.0);
    if (j > 0) {
      EXPECT_GT(t.thresholds[j], t.thresholds[j - 1]);
      EXPECT_LE(t.ccdf[j], t.ccdf[j - 1]);
    }
  }
}

TEST(FitTailExponent, ExactPowerLaw) {
  CcdfTable t;
  for (int k = 1; k <= 100; ++k) {
    t.thresholds.push_back(k);
    t.ccdf.push_back(1.0 / k);
  }
  t.sample_count = 100;
  const auto fit = fit_tail_exponent(t, 1, 100);
  EXPECT_NEAR(fit.slope, -1.0, 1e-6);
  EXPECT_NEAR(fit.amplitude, 1.0, 1e-6);
  EXPECT_EQ(fit.points, 100u);
}

TEST(FitTailExponent, FlatTable) {
  CcdfTable t;
  for (int k = 1; k <= 20; ++k) {
    t.thresholds.push_back(k);
    t.ccdf.push_back(0.3);
  }
  EXPECT_NEAR(fit_tail_exponent(t, 1, 20).slope, 0.0, 1e-12);
}

TEST(FitTailExponent, ParetoSamples) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> s(100000);
  for (auto& v : s) v = std::pow(1.0 - u(gen), -0.5);  // P(X >= t) = t^-2
  const auto fit = fit_tail_exponent(ccdf(s), 2, 50);
  EXPECT_NEAR(fit.slope, -2.0, 0.1);
}

TEST(FitTailExponent, Errors) {
  CcdfTable t;
  for (int k = 1; k <= 5; ++k) {
    t.thresholds.push_back(k);
    t.ccdf.push_back(1.0 / k);
  }
  EXPECT_THROW(fit_tail_exponent(t, 1, 5), FitError);
  EXPECT_THROW(fit_tail_exponent(t, 5, 1), ArgumentError);
}

TEST(FitPowerLaw, RejectsDegenerateInput) {
  const std::vector<double> x{2.0, 2.0, 2.0}, y{1.0, 2.0, 3.0};
  EXPECT_THROW(fit_power_law(x, y), FitError);
  const std::vector<double> neg{-1.0, -2.0};
  EXPECT_THROW(fit_power_law(neg, neg), FitError);
}

TEST(Histogram, CountsAndDensity) {
  const std::vector<double> s{0.1, 0.2, 0.6, 1.0, 1.5, -0.1};
  const auto h = histogram(s, 0.0, 1.0, 2);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(h.total, 6u);
  EXPECT_DOUBLE_EQ(h.center(1), 0.75);
  const auto d = h.density();
  EXPECT_DOUBLE_EQ(d[0], 2.0 / (6 * 0.5));
  EXPECT_THROW(histogram(s, 1.0, 0.0, 2), ArgumentError);
  EXPECT_THROW(histogram(s, 0.0, 1.0, 0), ArgumentError);
}

TEST(L1Distance, Simple) {
  const std::vector<double> p{1.0, 0.0}, q{0.0, 1.0};
  EXPECT_DOUBLE_EQ(l1_distance(p, q, 0.5), 1.0);
}

TEST(Quantile, NearestRank) {
  std::vector<double> s;
  for (int k = 1; k <= 100; ++k) s.push_back(101 - k);
  EXPECT_DOUBLE_EQ(quantile(s, 0.99), 99.0);
  EXPECT_DOUBLE_EQ(quantile(s, 1.0), 100.0);
  EXPECT_DOUBLE_EQ(quantile(s, 0.005), 1.0);
}

TEST(Summarize, MeanAndInterval) {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto m = summarize(v);
  EXPECT_EQ(m.count, 4u);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.sd, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_NEAR(m.ci_half, 1.96 * m.sd / 2.0, 1e-15);
  const auto empty = summarize(std::vector<double>{});
  EXPECT_EQ(empty.count, 0u);
  EXPECT_TRUE(std::isnan(empty.mean));
  EXPECT_TRUE(std::isnan(summarize(std::vector<double>{1.0}).ci_half));
}
