/*
 * Micro-benchmarks for the hot paths: canonical forms, lattice width and
 * the direction search, and the small-genus enumeration engine.
 */
#include <benchmark/benchmark.h>

#include "latpoly/curve.h"
#include "latpoly/enumerate.h"

using namespace latpoly;

namespace {

// a mid-sized genus-9 hexagon, sheared so the canonical search has work to do
Polygon sheared_hexagon() {
  Polygon p = hull({{4, 0}, {5, 0}, {3, 4}, {2, 5}, {0, 3}, {0, 2}});
  UnimodularMap u;
  u.m[0][0] = 3, u.m[0][1] = 1, u.m[1][0] = 2, u.m[1][1] = 1;
  u.tx = 7, u.ty = -5;
  return apply(u, p);
}

void bm_canonical_form(benchmark::State& state) {
  Polygon p = sheared_hexagon();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p));
}
BENCHMARK(bm_canonical_form);

void bm_lattice_width(benchmark::State& state) {
  Polygon p = sheared_hexagon();
  for (auto _ : state) benchmark::DoNotOptimize(lattice_width(p));
}
BENCHMARK(bm_lattice_width);

void bm_direction_search(benchmark::State& state) {
  Polygon p = sheared_hexagon();
  i64 lw = lattice_width(p);
  for (auto _ : state) benchmark::DoNotOptimize(directions_with_width_at_most(p, lw + 2));
}
BENCHMARK(bm_direction_search);

void bm_interior_hull(benchmark::State& state) {
  Polygon p = sheared_hexagon();
  for (auto _ : state) benchmark::DoNotOptimize(interior_hull(p));
}
BENCHMARK(bm_interior_hull);

void bm_curve_profile(benchmark::State& state) {
  Polygon p = sheared_hexagon();
  for (auto _ : state) benchmark::DoNotOptimize(curve_profile(p));
}
BENCHMARK(bm_curve_profile);

void bm_enumerate_genus(benchmark::State& state) {
  i64 g = state.range(0);
  for (auto _ : state) {
    i64 n = stream_by_genus(g, [](const EnumerationRecord&) {});
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_enumerate_genus)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
