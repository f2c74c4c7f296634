#include <benchmark/benchmark.h>

#include "hermcode/bounds.hpp"
#include "hermcode/codes.hpp"

using namespace hermcode;

static void BM_FieldMul(benchmark::State& state) {
  const FieldCtx ctx(static_cast<std::uint32_t>(state.range(0)), 1);
  FieldElement acc = FieldCtx::one();
  const FieldElement g = ctx.primitive();
  for (auto _ : state) {
    acc = ctx.mul(acc, g);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(3)->Arg(7);

static void BM_FieldAdd(benchmark::State& state) {
  const FieldCtx ctx(static_cast<std::uint32_t>(state.range(0)), 1);
  FieldElement acc{};
  const FieldElement g = ctx.primitive();
  for (auto _ : state) {
    acc = ctx.add(acc, g);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldAdd)->Arg(2)->Arg(3)->Arg(7);

static void BM_ConePoints(benchmark::State& state) {
  const FieldCtx ctx(3, 1);
  for (auto _ : state) {
    const auto cone = make_standard_cone(ctx, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(cone.points().size());
  }
}
BENCHMARK(BM_ConePoints)->Arg(3)->Arg(4);

static void BM_MinDistanceSweep(benchmark::State& state) {
  const FieldCtx ctx(2, 1);
  const auto code = build_code(ctx, make_standard_cone(ctx, 3), 2);
  MinDistanceOptions opt;
  opt.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages, opt));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(projective_count(4, 10)));
}
BENCHMARK(BM_MinDistanceSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  const FieldCtx ctx(3, 1);
  const auto cone = make_standard_cone(ctx, 2);
  OracleOptions opt;
  opt.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bruteforce_max_intersection(ctx, cone, 2, {}, opt));
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ExtremalConstruction(benchmark::State& state) {
  const FieldCtx ctx(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(construct_extremal(ctx, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExtremalConstruction)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
