#include <benchmark/benchmark.h>

#include "cubesurf/search.hpp"
#include "cubesurf/surface.hpp"

using namespace cubesurf;

static void BM_ExhaustiveQ4(benchmark::State& state) {
  for (auto _ : state) {
    SearchOptions opts;
    opts.ambient = 4;
    opts.max_faces = 24;
    opts.mode = SearchMode::exhaustive;
    SearchOutcome outcome = enumerate_closed_surfaces(opts);
    benchmark::DoNotOptimize(outcome.surfaces.size());
  }
}
BENCHMARK(BM_ExhaustiveQ4);

static void BM_RandomizedQ5FirstSurface(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SearchOptions opts;
    opts.ambient = 5;
    opts.max_faces = 80;
    opts.mode = SearchMode::randomized;
    opts.seed = seed++;
    opts.max_steps = 50000;
    SearchOutcome outcome = enumerate_closed_surfaces(opts);
    benchmark::DoNotOptimize(outcome.surfaces.size());
  }
}
BENCHMARK(BM_RandomizedQ5FirstSurface);

static void BM_CanonicalSignatureQ4Torus(benchmark::State& state) {
  SearchOptions opts;
  opts.ambient = 4;
  opts.max_faces = 24;
  opts.mode = SearchMode::exhaustive;
  SurfaceFilter filter;
  filter.euler_characteristic = 0;
  opts.target = filter;
  CubicalComplex torus = enumerate_closed_surfaces(opts).surfaces.front();
  for (auto _ : state) {
    std::string sig = canonical_signature(torus);
    benchmark::DoNotOptimize(sig.data());
  }
}
BENCHMARK(BM_CanonicalSignatureQ4Torus);

static void BM_ClassifyQ4Torus(benchmark::State& state) {
  SearchOptions opts;
  opts.ambient = 4;
  opts.max_faces = 24;
  opts.mode = SearchMode::exhaustive;
  SurfaceFilter filter;
  filter.euler_characteristic = 0;
  opts.target = filter;
  CubicalComplex torus = enumerate_closed_surfaces(opts).surfaces.front();
  for (auto _ : state) {
    SurfaceClass sc = classify(torus);
    benchmark::DoNotOptimize(sc.euler_characteristic);
  }
}
BENCHMARK(BM_ClassifyQ4Torus);
