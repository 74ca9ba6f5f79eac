#include <gtest/gtest.h>

#include <concepts>
#include <random>
#include <vector>

#include "ginibre/ensembles.hpp"
#include "ginibre/rng.hpp"

using namespace ginibre;

static_assert(std::uniform_random_bit_generator<RandomStream>);

namespace {

std::vector<std::uint64_t> draws(RandomStream s, int count) {
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = s();
  return out;
}

}  // namespace

TEST(Philox, KnownAnswerZero) {
  const auto r = philox4x32_10({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(r[0], 0x6627e8d5u);
  EXPECT_EQ(r[1], 0xe169c58du);
  EXPECT_EQ(r[2], 0xbc57ac4cu);
  EXPECT_EQ(r[3], 0x9b00dbd8u);
}

TEST(Philox, KnownAnswerAllOnes) {
  const std::uint32_t f = 0xffffffffu;
  const auto r = philox4x32_10({f, f, f, f}, {f, f});
  EXPECT_EQ(r[0], 0x408f276du);
  EXPECT_EQ(r[1], 0x41c83b0eu);
  EXPECT_EQ(r[2], 0xa20bc7c6u);
  EXPECT_EQ(r[3], 0x6d5451fdu);
}

TEST(Philox, KnownAnswerPiDigits) {
  const auto r = philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                               {0xa4093822u, 0x299f31d0u});
  EXPECT_EQ(r[0], 0xd16cfe09u);
  EXPECT_EQ(r[1], 0x94fdccebu);
  EXPECT_EQ(r[2], 0x5001e420u);
  EXPECT_EQ(r[3], 0x24126ea1u);
}

TEST(RandomStream, SameSeedAndIndexRepeat) {
  EXPECT_EQ(draws(spawn_stream(42, 0), 100), draws(spawn_stream(42, 0), 100));
}

TEST(RandomStream, DistinctIndicesDiffer) {
  const auto a = draws(spawn_stream(42, 0), 100);
  const auto b = draws(spawn_stream(42, 1), 100);
  int equal = 0;
  for (int i = 0; i < 100; ++i) equal += a[i] == b[i];
  EXPECT_EQ(equal, 0);
}

TEST(RandomStream, DistinctSeedsDiffer) {
  EXPECT_NE(draws(spawn_stream(1, 0), 10), draws(spawn_stream(2, 0), 10));
}

TEST(RandomStream, UniformRangeAndMean) {
  RandomStream s(7, 3);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // sd of the mean is sqrt(1/12 / n) ~ 6.5e-4
  EXPECT_NEAR(sum / n, 0.5, 4e-3);
}

TEST(RandomStream, ReportsProvenance) {
  RandomStream s(11, 5);
  EXPECT_EQ(s.master_seed(), 11u);
  EXPECT_EQ(s.stream_index(), 5u);
  EXPECT_EQ(RandomStream::name(), "philox4x32-10");
}
