#include <benchmark/benchmark.h>

#include "nilcomm/closure.hpp"
#include "nilcomm/components.hpp"
#include "nilcomm/invariants.hpp"
#include "nilcomm/oracle.hpp"

using namespace nilcomm;

static void BM_Enumerate(benchmark::State& state) {
  const PairParams params = make_params(PairType::CI, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(PairType::CI, params));
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(12)->Arg(14);

static void BM_ClosurePoset(benchmark::State& state) {
  const PairParams params = make_params(PairType::CI, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ClosurePoset poset(PairType::CI, params);
    benchmark::DoNotOptimize(poset.size());
  }
}
BENCHMARK(BM_ClosurePoset)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const PairParams params = make_params(PairType::BDI, 12, 4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(classify_components(PairType::BDI, params, kDefaultBound, 1));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

static void BM_CentralizerCount(benchmark::State& state) {
  const AbDiagram d = parse_diagram("ababa/aba/bab/a/b");
  for (auto _ : state) benchmark::DoNotOptimize(dim_p_cent(d, PairType::BDI));
}
BENCHMARK(BM_CentralizerCount);

static void BM_CentralizerOracle(benchmark::State& state) {
  const MatrixRealization real = realize(parse_diagram("ababa/aba/bab/a/b"), PairType::BDI);
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_dims(real));
}
BENCHMARK(BM_CentralizerOracle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
