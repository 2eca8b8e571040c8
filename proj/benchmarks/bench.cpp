#include "tcomb/depgraph.hpp"
#include "tcomb/dp_transform.hpp"
#include "tcomb/interpretation.hpp"
#include "tcomb/oracle.hpp"
#include "tcomb/problem_io.hpp"
#include "tcomb/strategy.hpp"

#include <benchmark/benchmark.h>

namespace {

const char* mult_text = R"(
(VAR x y)
(INFIX + *)
(RULES
  0 + y -> y
  s(x) + y -> x + y
  0 * y -> 0
  s(x) * y -> y + (x * y)
)
(STRATEGY INNERMOST))";

const tcomb::Problem& mult() {
    static const tcomb::Problem p = tcomb::parse_problem(mult_text);
    return p;
}

void BM_ccOracle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tcomb::cc_oracle(mult(), n, 60));
}
BENCHMARK(BM_ccOracle)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

void BM_EstimateDG(benchmark::State& state) {
    const auto p = tcomb::dt_problem(mult());
    for (auto _ : state) benchmark::DoNotOptimize(tcomb::estimate_dg(p));
}
BENCHMARK(BM_EstimateDG)->Unit(benchmark::kMicrosecond);

void BM_SynthesizeLinear(benchmark::State& state) {
    auto p = tcomb::dt_problem(mult());
    p.strict = p.strict.with_labels({"d#"});
    for (auto _ : state) benchmark::DoNotOptimize(tcomb::synthesize(p, 1, 3));
}
BENCHMARK(BM_SynthesizeLinear)->Unit(benchmark::kMillisecond);

void BM_StrategyMult(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tcomb::default_strategy(mult()));
}
BENCHMARK(BM_StrategyMult)->Unit(benchmark::kSecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
