// Serial vs OpenMP-batched specialization search.
#include <benchmark/benchmark.h>

#include "subq/constructor/construction.hpp"
#include "subq/formulas/enumeration.hpp"

using namespace subq;

namespace {

BasicOpen golden_context() { return parse_open("inc: sqrt(2); exc: sqrt(3)"); }

SearchOptions options(bool parallel) {
  SearchOptions o;
  o.parallel = parallel;
  return o;
}

// Listing formula t searched on both sides, as the construction does.
void BM_ListingSearch(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const auto t = static_cast<std::size_t>(state.range(1));
  BasicRankable beta = enumerate_hypersurface_formulas(t);
  BasicOpen context = golden_context();
  std::size_t candidates = 0;
  for (auto _ : state) {
    for (Side side : {Side::NotInZ, Side::InZ}) {
      HilbertResult r = hilbert_specialize(beta, context, ZPredicate::integers(), side, options(parallel));
      candidates += r.candidates;
    }
  }
  state.counters["candidates/iter"] = benchmark::Counter(static_cast<double>(candidates), benchmark::Counter::kAvgIterations);
}

void BM_Cubic(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  BasicRankable beta = to_rankable(parse_formula("E Y1 Y2 . (Y2^3 - Y1*X - 2 = 0)")).front();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        hilbert_specialize(beta, golden_context(), ZPredicate::integers(), Side::InZ, options(parallel)));
}

void BM_Construction(benchmark::State& state) {
  ConstructionConfig cfg;
  cfg.initial = golden_context();
  cfg.search = options(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(run_construction(cfg, 12));
}

}  // namespace

BENCHMARK(BM_ListingSearch)->ArgNames({"parallel", "t"})->ArgsProduct({{0, 1}, {1, 2, 3, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cubic)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Construction)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
