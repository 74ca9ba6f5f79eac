#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "ginibre/rng.hpp"

namespace ginibre {

/// Entry laws, all normalized so that E|x_ab|^2 = 1/N.
enum class EnsembleKind {
  real_gaussian,     ///< i.i.d. N(0, 1/N)
  complex_gaussian,  ///< i.i.d. complex normal, real/imag parts N(0, 1/(2N))
  bernoulli,         ///< i.i.d. uniform on {-1/sqrt(N), +1/sqrt(N)}
};

/// Real ensembles produce matrices with an exactly zero imaginary part.
constexpr bool is_real(EnsembleKind kind) noexcept {
  return kind != EnsembleKind::complex_gaussian;
}

std::string_view to_string(EnsembleKind kind) noexcept;

/// Accepts "real", "real-gaussian", "complex", "complex-gaussian", "bernoulli".
/// Throws ArgumentError otherwise.
EnsembleKind parse_ensemble(std::string_view text);

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

inline RandomStream spawn_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
  return RandomStream(master_seed, stream_index);
}

inline RandomStream spawn_stream(const SeedSpec& seed) {
  return RandomStream(seed.master_seed, seed.stream_index);
}

/// Draws an n x n matrix from `kind`, consuming entries column-major from
/// `stream`. Throws ArgumentError for n == 0.
Eigen::MatrixXcd sample_matrix(Eigen::Index n, EnsembleKind kind, RandomStream& stream);

/// Same, on a fresh stream; identical inputs give bit-identical outputs.
Eigen::MatrixXcd sample_matrix(Eigen::Index n, EnsembleKind kind, const SeedSpec& seed);

}  // namespace ginibre
