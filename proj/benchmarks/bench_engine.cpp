#include <random>

#include <benchmark/benchmark.h>

#include "random_modules.hpp"
#include "syzlab/bigpolygon.hpp"
#include "syzlab/borel.hpp"
#include "syzlab/syzygy.hpp"

using namespace syzlab;

namespace {

std::vector<PresentedModule> sample(std::uint64_t seed, int count, int vars) {
  std::mt19937_64 rng(seed);
  cli::RandomModuleShape shape;
  shape.min_vars = shape.max_vars = vars;
  std::vector<PresentedModule> out;
  for (int i = 0; i < count; ++i) out.push_back(cli::random_module(rng, shape));
  return out;
}

void BM_GroebnerRandom(benchmark::State& state) {
  auto modules = sample(7, 16, static_cast<int>(state.range(0)));
  EngineOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    for (const auto& M : modules) {
      benchmark::DoNotOptimize(reduced_groebner_basis(M.ambient(), M.relations().columns(), options));
    }
  }
}
BENCHMARK(BM_GroebnerRandom)->Args({3, 1})->Args({4, 1})->Args({4, 4});

void BM_PolygonIdeal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ring = polygon_ring(n);
  auto ys = polygon_elements(ring, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_groebner_basis(ring, ys));
}
BENCHMARK(BM_PolygonIdeal)->DenseRange(3, 7, 2);

void BM_Resolution(benchmark::State& state) {
  auto modules = sample(11, 16, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& M : modules) benchmark::DoNotOptimize(minimal_free_resolution(M));
  }
}
BENCHMARK(BM_Resolution)->Arg(3)->Arg(4);

void BM_SyzygyOrder(benchmark::State& state) {
  auto modules = sample(13, 16, 3);
  for (auto _ : state) {
    for (const auto& M : modules) benchmark::DoNotOptimize(syzygy_order(M));
  }
}
BENCHMARK(BM_SyzygyOrder);

void BM_BigPolygonTheorem(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_syzygy_theorem(m, 1, 1));
}
BENCHMARK(BM_BigPolygonTheorem)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BasisFreeness(benchmark::State& state) {
  auto pair = build_borel_pair(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_basis_freeness(pair, 8));
}
BENCHMARK(BM_BasisFreeness)->DenseRange(1, 3);

}  // namespace
BENCHMARK_MAIN();
