#include <benchmark/benchmark.h>

#include "lotvns/gvns.hpp"
#include "lotvns/vnd.hpp"

namespace {

const lotvns::Instance& full_scale_instance() {
    static const lotvns::Instance inst = [] {
        lotvns::GeneratorConfig cfg;
        cfg.products = 300;
        cfg.periods = 52;
        cfg.seed = 1;
        return lotvns::generate_instance(cfg);
    }();
    return inst;
}

void BM_EvaluatePlan(benchmark::State& state) {
    const auto& inst = full_scale_instance();
    const auto plan = lotvns::initial_solution(inst);
    for (auto _ : state) benchmark::DoNotOptimize(lotvns::evaluate(inst, plan));
}
BENCHMARK(BM_EvaluatePlan);

void BM_VndPassSerial(benchmark::State& state) {
    const auto& inst = full_scale_instance();
    const auto plan = lotvns::initial_solution(inst);
    const int nbh = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lotvns::vnd_pass(inst, plan, nbh, lotvns::VndMode::serial));
}
BENCHMARK(BM_VndPassSerial)->DenseRange(1, lotvns::kNeighborhoodCount)->Unit(benchmark::kMillisecond);

// Arg: compute lanes.
void BM_VndPassProductParallel(benchmark::State& state) {
    const auto& inst = full_scale_instance();
    const auto plan = lotvns::initial_solution(inst);
    lotvns::ComputePool pool(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(lotvns::vnd_pass(inst, plan, 1, lotvns::VndMode::product_parallel, &pool));
}
BENCHMARK(BM_VndPassProductParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_WorkerRound(benchmark::State& state) {
    const auto& inst = full_scale_instance();
    const auto start = lotvns::vnd(inst, lotvns::initial_solution(inst), 4, lotvns::VndMode::serial).plan;
    lotvns::SolverConfig cfg;
    cfg.workers = static_cast<std::size_t>(state.range(0));
    lotvns::ComputePool pool;
    std::uint64_t round = 0;
    for (auto _ : state) benchmark::DoNotOptimize(lotvns::worker_round(inst, start, 1, cfg, round++, &pool));
}
BENCHMARK(BM_WorkerRound)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
