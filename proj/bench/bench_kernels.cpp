#include <benchmark/benchmark.h>

#include "tfstar/consistency.hpp"

using namespace tfstar;

namespace {

CheckConfig check_config()
{
    CheckConfig cfg;
    cfg.samples = 500;
    cfg.seed = 42;
    return cfg;
}

ObstructionProblem obstruction_problem(int which)
{
    if (which == 0)
        return ObstructionProblem::mult_by_p(3, {1, 2}, {2, 2, 2});
    return ObstructionProblem::mult_by_p(2, {1, 3}, {2, 3, 3});
}

void BM_crosscheck_serial(benchmark::State& state)
{
    CheckConfig cfg = check_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(crosscheck_serial(cfg));
}

void BM_crosscheck_parallel(benchmark::State& state)
{
    CheckConfig cfg = check_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(crosscheck_parallel(cfg));
}

void BM_obstruction_serial(benchmark::State& state)
{
    ObstructionProblem prob = obstruction_problem(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(obstruction_search_serial(prob));
}

void BM_obstruction_parallel(benchmark::State& state)
{
    ObstructionProblem prob = obstruction_problem(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(obstruction_search_parallel(prob));
}

} // namespace

BENCHMARK(BM_crosscheck_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_crosscheck_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_obstruction_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_obstruction_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
