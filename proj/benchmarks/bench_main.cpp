#include <benchmark/benchmark.h>

#include "ginibre/ensembles.hpp"
#include "ginibre/pseudospectrum.hpp"
#include "ginibre/solvers.hpp"
#include "ginibre/spectral.hpp"
#include "ginibre/susy.hpp"

using namespace ginibre;

namespace {

Eigen::MatrixXcd matrix(Eigen::Index n) {
  return sample_matrix(n, EnsembleKind::real_gaussian, SeedSpec{1, 0});
}

void BM_SampleMatrix(benchmark::State& state) {
  RandomStream stream(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_matrix(state.range(0), EnsembleKind::real_gaussian, stream));
  }
}
BENCHMARK(BM_SampleMatrix)->Arg(100)->Arg(500);

void BM_SingularValues(benchmark::State& state) {
  const auto x = shifted(matrix(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(x));
}
BENCHMARK(BM_SingularValues)->Arg(100);

void BM_GramEigenvalues(benchmark::State& state) {
  const auto x = shifted(matrix(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(gram_eigenvalues(x));
}
BENCHMARK(BM_GramEigenvalues)->Arg(100);

void BM_EigenDecomposition(benchmark::State& state) {
  const auto x = matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_decomposition(x));
}
BENCHMARK(BM_EigenDecomposition)->Arg(100);

void BM_CgSolve(benchmark::State& state) {
  const Eigen::MatrixXd a = (matrix(100) - 0.5 * Eigen::MatrixXcd::Identity(100, 100)).real();
  const Eigen::VectorXd b = Eigen::VectorXd::Ones(100).normalized();
  auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return a.transpose() * (a * v);
  };
  for (auto _ : state) benchmark::DoNotOptimize(cg_solve<double>(apply, b, 1e-8, 400));
}
BENCHMARK(BM_CgSolve);

void BM_SusyTrace(benchmark::State& state) {
  QuadSpec q;
  q.check_contour = false;
  q.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(susy_trace({4, {0.5, 0.3}, 0.05}, q));
  }
}
BENCHMARK(BM_SusyTrace)->Unit(benchmark::kMillisecond);

void BM_PseudospectrumArea(benchmark::State& state) {
  const auto x = matrix(30);
  const Region disk({Disk{0.0, 0.9}});
  for (auto _ : state) benchmark::DoNotOptimize(pseudospectrum_area(x, 1e-3, disk, 5e-3));
}
BENCHMARK(BM_PseudospectrumArea)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
