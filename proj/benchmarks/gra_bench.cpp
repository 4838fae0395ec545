// Grey relational ranking throughput.
#include <benchmark/benchmark.h>

#include "hriot/grey.hpp"
#include "hriot/rng.hpp"

namespace {

hriot::DecisionMatrix make_matrix(std::size_t rows, std::size_t cols) {
  hriot::Rng rng(rows * 31 + cols);
  hriot::DecisionMatrix m;
  for (std::size_t k = 0; k < cols; ++k) {
    m.criteria.push_back({"c" + std::to_string(k),
                          k % 2 ? hriot::Direction::Cost : hriot::Direction::Benefit,
                          1.0});
  }
  for (std::size_t i = 0; i < rows; ++i) {
    m.candidates.push_back(static_cast<hriot::NodeId>(i));
    std::vector<double> row;
    for (std::size_t k = 0; k < cols; ++k) row.push_back(rng.uniform(0.0, 1000.0));
    m.values.push_back(std::move(row));
  }
  return m;
}

void BM_RankCandidates(benchmark::State& state) {
  const auto m = make_matrix(std::size_t(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hriot::rank_candidates(m));
  }
}

}  // namespace

BENCHMARK(BM_RankCandidates)->Arg(8)->Arg(32)->Arg(128);
