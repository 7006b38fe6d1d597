#include <benchmark/benchmark.h>

#include "cobalex/invariants.hpp"
#include "cobalex/sampling.hpp"

using namespace cobalex;

namespace {

IntMatrix graph_basis(unsigned g, std::uint64_t seed) {
  Rng rng(seed);
  const IntMatrix m = random_symplectic(g, 8, rng);
  return vstack(IntMatrix::identity(2 * g), m);
}

void BM_PluckerPoint(benchmark::State& state) {
  const auto basis = graph_basis(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(plucker_point(basis));
}
BENCHMARK(BM_PluckerPoint)->DenseRange(1, 4);

void BM_CorrespondenceMap(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  const auto basis = graph_basis(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(correspondence_map(basis, 2 * g));
}
BENCHMARK(BM_CorrespondenceMap)->DenseRange(1, 4);

ClosedManifold sample_manifold(unsigned g) {
  Rng rng(3);
  CobordismSampler opts;
  opts.max_genus = 4;
  return random_closed_manifold(g, rng, opts);
}

void BM_AlexanderDet(benchmark::State& state) {
  const auto cm = sample_manifold(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_det(cm));
}
BENCHMARK(BM_AlexanderDet)->DenseRange(1, 4);

void BM_AlexanderTraces(benchmark::State& state) {
  const auto cm = sample_manifold(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_traces(cm));
}
BENCHMARK(BM_AlexanderTraces)->DenseRange(1, 4);

void BM_ComposeHandles(benchmark::State& state) {
  const unsigned g = static_cast<unsigned>(state.range(0));
  const auto z = elementary_z(g), zp = elementary_zprime(g);
  for (auto _ : state) benchmark::DoNotOptimize(compose(z, zp));
}
BENCHMARK(BM_ComposeHandles)->DenseRange(1, 5);

}  // namespace

BENCHMARK_MAIN();
