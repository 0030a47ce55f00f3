// Serial reference vs OpenMP trial loop, and Count vs Threshold decoding cost.

#include <benchmark/benchmark.h>

#include "repdec/simulator.hpp"

using namespace repdec;

namespace {

TrialConfig base_config(AssignmentStrategy strategy, std::uint32_t tau, std::uint32_t trials) {
    auto field = Field::make(2, 6);
    return TrialConfig{RepeatedCode(RSCode(field, 63, 14), 5), strategy, tau, trials, 7, false, MessageMode::zero, false, std::nullopt};
}

void BM_TrialsSerial(benchmark::State& state) {
    const auto cfg = base_config(ThresholdAssignment{3}, 187, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrialsParallel(benchmark::State& state) {
    const auto cfg = base_config(ThresholdAssignment{3}, 187, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_trials(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DecodeCount(benchmark::State& state) {
    const auto cfg = base_config(CountAssignment{}, static_cast<std::uint32_t>(state.range(0)), 1);
    std::uint64_t t = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_trial(cfg, t++));
}

void BM_DecodeThreshold(benchmark::State& state) {
    const auto cfg = base_config(ThresholdAssignment{3}, static_cast<std::uint32_t>(state.range(0)), 1);
    std::uint64_t t = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_trial(cfg, t++));
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrialsParallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DecodeCount)->Arg(185)->Arg(229)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeThreshold)->Arg(185)->Arg(187)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
