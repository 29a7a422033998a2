#include <benchmark/benchmark.h>

#include "cubesurf/metrics.hpp"
#include "cubesurf/projection.hpp"
#include "cubesurf/search.hpp"

using namespace cubesurf;

namespace {

CubicalComplex torus_q4() {
  SearchOptions opts;
  opts.ambient = 4;
  opts.max_faces = 24;
  opts.mode = SearchMode::exhaustive;
  SurfaceFilter filter;
  filter.orientable = true;
  filter.euler_characteristic = 0;
  opts.target = filter;
  return enumerate_closed_surfaces(opts).surfaces.front();
}

EmbeddingState bench_state() {
  EmbeddingState s;
  s.d5 = 3.2;
  s.d4 = 8.0;
  s.phi = {0.1, 0.7, 1.3, 1.9, 2.5, 3.1, 3.7, 4.3, 4.9, 5.5};
  return s;
}

}  // namespace

static void BM_ApplyState(benchmark::State& state) {
  CubicalComplex torus = torus_q4();
  EmbeddingState s = bench_state();
  for (auto _ : state) {
    ProjectedScene scene = apply_state(torus, s);
    benchmark::DoNotOptimize(scene.vertex_points.data());
  }
}
BENCHMARK(BM_ApplyState);

static void BM_RotationMatrix(benchmark::State& state) {
  EmbeddingState s = bench_state();
  for (auto _ : state) {
    Mat5 m = rotation_matrix(s.phi);
    benchmark::DoNotOptimize(m[0][0]);
  }
}
BENCHMARK(BM_RotationMatrix);

static void BM_FaceIntersections(benchmark::State& state) {
  CubicalComplex torus = torus_q4();
  ProjectedScene scene = apply_state(torus, bench_state());
  for (auto _ : state) {
    int sigma = face_intersections(scene, torus);
    benchmark::DoNotOptimize(sigma);
  }
}
BENCHMARK(BM_FaceIntersections);

static void BM_EdgeOverlaps(benchmark::State& state) {
  CubicalComplex torus = torus_q4();
  ProjectedScene scene = apply_state(torus, bench_state());
  WidthConfig width{default_beam_radius(scene)};
  for (auto _ : state) {
    int o = edge_overlaps(scene, torus, width);
    benchmark::DoNotOptimize(o);
  }
}
BENCHMARK(BM_EdgeOverlaps);

static void BM_TotalClearance(benchmark::State& state) {
  CubicalComplex torus = torus_q4();
  ProjectedScene scene = apply_state(torus, bench_state());
  for (auto _ : state) {
    double lsum = total_clearance(scene, torus);
    benchmark::DoNotOptimize(lsum);
  }
}
BENCHMARK(BM_TotalClearance);

static void BM_FullMetricsEvaluation(benchmark::State& state) {
  CubicalComplex torus = torus_q4();
  EmbeddingState s = bench_state();
  WidthConfig width{default_beam_radius(apply_state(torus, s))};
  for (auto _ : state) {
    ProjectedScene scene = apply_state(torus, s);
    MetricsReport report = compute_metrics(scene, torus, width, /*collect_pairs=*/false);
    benchmark::DoNotOptimize(report.total_clearance);
  }
}
BENCHMARK(BM_FullMetricsEvaluation);
