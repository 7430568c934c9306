#include "gridtorus/adjunction.hpp"
#include "gridtorus/contact.hpp"
#include "gridtorus/families.hpp"
#include "gridtorus/localization.hpp"
#include "gridtorus/serialize.hpp"

#include <benchmark/benchmark.h>

using namespace gridtorus;

static void BM_EulerCharIsolated(benchmark::State& state) {
    const GridData g = build_bw3_isolated(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(euler_char(g, "L", 2));
}
BENCHMARK(BM_EulerCharIsolated)->Arg(3)->Arg(6)->Arg(10);

static void BM_EulerCharCube(benchmark::State& state) {
    const GridData g = build_cube_full_torus();
    for (auto _ : state) benchmark::DoNotOptimize(euler_char(g, "L", state.range(0)));
}
BENCHMARK(BM_EulerCharCube)->Arg(1)->Arg(4);

static void BM_Classify(benchmark::State& state) {
    const GridData g = build_quadric_bundle(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify_bw3(g));
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(12)->Arg(40);

static void BM_SolveIdentity(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_bw3_a(state.range(0)));
}
BENCHMARK(BM_SolveIdentity)->Arg(3)->Arg(12)->Arg(30);

static void BM_BuildSoAdjoint(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_so_adjoint(state.range(0)));
}
BENCHMARK(BM_BuildSoAdjoint)->Arg(8)->Arg(12)->Arg(24);

static void BM_JsonRoundTrip(benchmark::State& state) {
    const std::string text = to_json(build_so_adjoint(12));
    for (auto _ : state) benchmark::DoNotOptimize(to_json(from_json(text)));
}
BENCHMARK(BM_JsonRoundTrip);
BENCHMARK_MAIN();
