#include <benchmark/benchmark.h>

#include "gqi/entanglement.hpp"
#include "gqi/infomeasures.hpp"
#include "gqi/random.hpp"
#include "gqi/symplectic.hpp"

namespace {

void BM_Williamson(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  gqi::Rng rng(7);
  const gqi::Qcm V = gqi::random_qcm(rng, gqi::Partition{{"S", m}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gqi::williamson(V.matrix));
  }
}
BENCHMARK(BM_Williamson)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ImMutual(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  gqi::Rng rng(7);
  const gqi::Qcm V = gqi::random_qcm(rng, gqi::Partition{{"A", m}, {"B", m}});
  const gqi::Split split{{"A"}, {"B"}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gqi::im_mutual(V, split));
  }
}
BENCHMARK(BM_ImMutual)->Arg(1)->Arg(2)->Arg(4);

void BM_ReofNumeric(benchmark::State& state) {
  const gqi::Qcm V = gqi::pure_loss_state(0.7, 5.0);
  const gqi::Split split{{"A"}, {"B"}};
  gqi::OptimOptions opts;
  opts.restarts = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gqi::reof_numeric(V, split, opts));
  }
}
BENCHMARK(BM_ReofNumeric)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
