#include "gallery/geom.h"
#include "gallery/oracle.h"
#include "gallery/structured.h"

#include <benchmark/benchmark.h>

using namespace gallery;

namespace {

/// Polygon with n vertices and a handful of reflex ones, fixed by seed.
geom::Polygon sample_polygon(int n) { return oracle::random_polygon({n, 4, 17}); }

void BM_VisibilitySerial(benchmark::State& state) {
    auto p = sample_polygon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(geom::visibility_table_serial(p, p.vertices()));
}

void BM_VisibilityParallel(benchmark::State& state) {
    auto p = sample_polygon(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(geom::visibility_table(p, p.vertices(), threads));
}

void BM_SolveSerial(benchmark::State& state) {
    auto w = build_workspace(sample_polygon(static_cast<int>(state.range(0))), Variant::VertexVertex);
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(solve_serial(w, k).yes);
}

void BM_SolveParallel(benchmark::State& state) {
    auto w = build_workspace(sample_polygon(static_cast<int>(state.range(0))), Variant::VertexVertex);
    SolveOptions o;
    o.threads = static_cast<int>(state.range(2));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(solve(w, k, o).yes);
}

}  // namespace

BENCHMARK(BM_VisibilitySerial)->Arg(16)->Arg(32);
BENCHMARK(BM_VisibilityParallel)->Args({16, 4})->Args({32, 4});
BENCHMARK(BM_SolveSerial)->Args({12, 2})->Args({16, 3});
BENCHMARK(BM_SolveParallel)->Args({12, 2, 4})->Args({16, 3, 4});

BENCHMARK_MAIN();
