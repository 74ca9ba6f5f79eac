#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace ginibre {

/// Philox4x32-10 counter-based generator.
///
/// The key is the 64-bit master seed; the upper half of the 128-bit counter
/// holds the stream index and the lower half counts blocks. Two streams with
/// different indices therefore never visit the same counter value, and a
/// stream's output does not depend on how many other streams exist or in what
/// order they are consumed.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  std::uint64_t master_seed() const noexcept { return key_; }
  std::uint64_t stream_index() const noexcept { return stream_; }

  static constexpr std::string_view name() noexcept { return "philox4x32-10"; }

 private:
  void refill() noexcept;

  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;  // 32-bit words consumed from buffer_
};

/// Raw Philox4x32-10 block function, exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

}  // namespace ginibre
