#include <benchmark/benchmark.h>

#include "specmix/blaschke.hpp"
#include "specmix/generators.hpp"
#include "specmix/norms.hpp"
#include "specmix/spectral.hpp"
#include "specmix/sweep.hpp"

namespace {

using namespace specmix;

void BM_HermitianNorm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TransitionMap T = random_channel(d, 3, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        op_norm(T.matrix, NormKind::one_to_one_hermitian, d));
  }
}
BENCHMARK(BM_HermitianNorm)->Arg(2)->Arg(3)->Arg(4);

void BM_AnalyzeMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TransitionMap T = random_stochastic(d, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_matrix(T.matrix));
  }
}
BENCHMARK(BM_AnalyzeMatrix)->Arg(4)->Arg(8)->Arg(16);

void BM_BlaschkeSup(benchmark::State& state) {
  BlaschkeData B{{{Complex(0, 0), 1},
                  {Complex(0.5, 0), 1},
                  {Complex(-0.3, 0.2), 1}}};
  BlaschkeSupOptions opts;
  opts.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(blaschke_inv_sup(B, 0.55, opts));
  }
}
BENCHMARK(BM_BlaschkeSup)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_SweepClassical(benchmark::State& state) {
  RealVector pi(4);
  pi << 0.1, 0.2, 0.3, 0.4;
  auto [T, cert] = metropolis_chain(pi, RealMatrix::Constant(4, 4, 0.25));
  Instance inst;
  inst.id = "bench";
  inst.map = T;
  inst.cert = cert;
  inst.contractive = true;
  RunConfig cfg;
  cfg.norm = NormKind::one_to_one_classical;
  cfg.n_max = static_cast<long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(inst, cfg));
  }
}
BENCHMARK(BM_SweepClassical)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
