#include "ginibre/ensembles.hpp"

#include <cmath>
#include <random>

#include "ginibre/errors.hpp"

namespace ginibre {

std::string_view to_string(EnsembleKind kind) noexcept {
  switch (kind) {
    case EnsembleKind::real_gaussian:
      return "real";
    case EnsembleKind::complex_gaussian:
      return "complex";
    case EnsembleKind::bernoulli:
      return "bernoulli";
  }
  return "unknown";
}

EnsembleKind parse_ensemble(std::string_view text) {
  if (text == "real" || text == "real-gaussian") return EnsembleKind::real_gaussian;
  if (text == "complex" || text == "complex-gaussian") return EnsembleKind::complex_gaussian;
  if (text == "bernoulli") return EnsembleKind::bernoulli;
  throw ArgumentError("unknown ensemble '" + std::string(text) +
                      "' (expected real, complex or bernoulli)");
}

Eigen::MatrixXcd sample_matrix(Eigen::Index n, EnsembleKind kind, RandomStream& stream) {
  if (n < 1) throw ArgumentError("sample_matrix: dimension must be at least 1");
  Eigen::MatrixXcd m(n, n);
  const double nd = static_cast<double>(n);
  switch (kind) {
    case EnsembleKind::real_gaussian: {
      std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(nd));
      for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = {normal(stream), 0.0};
      break;
    }
    case EnsembleKind::complex_gaussian: {
      std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0 * nd));
      for (Eigen::Index k = 0; k < m.size(); ++k) {
        const double re = normal(stream);
        const double im = normal(stream);
        m.data()[k] = {re, im};
      }
      break;
    }
    case EnsembleKind::bernoulli: {
      const double s = 1.0 / std::sqrt(nd);
      std::uint64_t bits = 0;
      int left = 0;
      for (Eigen::Index k = 0; k < m.size(); ++k) {
        if (left == 0) {
          bits = stream();
          left = 64;
        }
        m.data()[k] = {(bits & 1u) ? s : -s, 0.0};
        bits >>= 1;
        --left;
      }
      break;
    }
  }
  return m;
}

Eigen::MatrixXcd sample_matrix(Eigen::Index n, EnsembleKind kind, const SeedSpec& seed) {
  RandomStream stream = spawn_stream(seed);
  return sample_matrix(n, kind, stream);
}

}  // namespace ginibre
