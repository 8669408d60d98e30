#include "regext/classifier.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace regext;

namespace {

const char* const kTypes[] = {"A2", "B2", "G2", "A3", "B3", "C3"};

void BM_RootSystem(benchmark::State& state) {
  const LieType type = LieType::parse(state.range(0) == 0 ? "E7" : "E8");
  for (auto _ : state) {
    RootSystem sys(type);
    benchmark::DoNotOptimize(sys.size());
  }
}
BENCHMARK(BM_RootSystem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateClosed(benchmark::State& state) {
  const RootSystem sys(LieType::parse(kTypes[state.range(0)]));
  for (auto _ : state) {
    auto all = enumerate_closed(sys);
    benchmark::DoNotOptimize(all.data());
    state.counters["subsets"] = static_cast<double>(all.size());
  }
  state.SetLabel(sys.type().name());
}
BENCHMARK(BM_EnumerateClosed)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_BuildModule(benchmark::State& state) {
  // Adjoint-sized and larger modules of B3.
  LieContext ctx(LieType::parse("B3"));
  const Weight lambda = state.range(0) == 0 ? Weight{{0, 1, 0}} : Weight{{1, 0, 1}};
  for (auto _ : state) {
    auto m = build_module(ctx.chevalley(), lambda, 4096);
    benchmark::DoNotOptimize(m.dimension());
    state.counters["dim"] = m.dimension();
  }
}
BENCHMARK(BM_BuildModule)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExpectedCharacter(benchmark::State& state) {
  const RootSystem sys(LieType::parse("E8"));
  const Weight lambda = state.range(0) == 0 ? sys.fundamental_weight(7) : sys.fundamental_weight(0);
  for (auto _ : state) {
    auto ch = expected_character(sys, lambda);
    benchmark::DoNotOptimize(ch.dimension);
  }
}
BENCHMARK(BM_ExpectedCharacter)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyRegularExtreme(benchmark::State& state) {
  const char* name = state.range(0) == 0 ? "A2" : "B2";
  for (auto _ : state) {
    LieContext ctx(LieType::parse(name));
    auto report = verify_regular_extreme(ctx, 2, VerifyOptions{});
    benchmark::DoNotOptimize(report.verdicts.size());
  }
  state.SetLabel(name);
}
BENCHMARK(BM_VerifyRegularExtreme)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
