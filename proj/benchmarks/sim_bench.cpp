// Whole-round simulation throughput for each protocol.
#include <benchmark/benchmark.h>

#include "hriot/sim.hpp"

namespace {

hriot::ScenarioConfig bench_config() {
  hriot::ScenarioConfig cfg;
  cfg.device_count = 100;
  cfg.fog_count = 4;
  cfg.rounds = 50;
  cfg.initial_energy_j = 1000.0;
  cfg.validate();
  return cfg;
}

void BM_RunScenario(benchmark::State& state) {
  const auto cfg = bench_config();
  const auto protocol = static_cast<hriot::Protocol>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hriot::run_scenario(cfg, protocol, 1));
  }
}

}  // namespace

BENCHMARK(BM_RunScenario)
    ->Arg(int(hriot::Protocol::HRIOT))
    ->Arg(int(hriot::Protocol::DIRECT))
    ->Arg(int(hriot::Protocol::EECRP_LIKE))
    ->Arg(int(hriot::Protocol::ERGID_LIKE));
