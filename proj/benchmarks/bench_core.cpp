#include <benchmark/benchmark.h>

#include "cubic3/construct.hpp"
#include "cubic3/level_maps.hpp"
#include "cubic3/oracle.hpp"
#include "cubic3/parametrization.hpp"
#include "cubic3/representations.hpp"
#include "cubic3/trinomials.hpp"

using namespace cubic3;

static void BM_RepresentU3V(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(represent_u3v(n));
}
BENCHMARK(BM_RepresentU3V)->Arg(91)->Arg(9991)->Arg(999983);

static void BM_EnumerateY11(benchmark::State& state) {
  const i64 st_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Y11(st_max));
}
BENCHMARK(BM_EnumerateY11)->Arg(8)->Arg(16)->Arg(32);

static void BM_BruteSolutions3(benchmark::State& state) {
  const i64 z_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_solutions(Curve::Three, 7, z_max));
}
BENCHMARK(BM_BruteSolutions3)->Arg(50)->Arg(100)->Arg(200);

static void BM_BuildYD1Star(benchmark::State& state) {
  const i64 d = state.range(0);
  const PointSet base = base_Y11(100);
  for (auto _ : state) benchmark::DoNotOptimize(build_YD1_star(d, base));
}
BENCHMARK(BM_BuildYD1Star)->Arg(7)->Arg(91);

static void BM_EmitTrinomials(benchmark::State& state) {
  const i64 st_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(emit(7, st_max));
}
BENCHMARK(BM_EmitTrinomials)->Arg(6)->Arg(12)->Arg(24);

static void BM_ConstructedX1DStar(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(constructed_set(SetKind::X1D_STAR, 7, state.range(0)));
}
BENCHMARK(BM_ConstructedX1DStar)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
