#include <benchmark/benchmark.h>

#include "tyinv/classify.hpp"
#include "tyinv/forms.hpp"
#include "tyinv/gauss.hpp"
#include "tyinv/harness/experiment.hpp"
#include "tyinv/tycat.hpp"

namespace {

using namespace tyinv;

Bicharacter diagonal(const std::vector<std::int64_t>& factors) {
  const auto g = make_group(factors);
  std::string gram;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) gram += ';';
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j) gram += ',';
      gram += i == j ? "1/" + std::to_string(factors[i]) : "0";
    }
  }
  return Bicharacter(parse_gram_literal(g, gram));
}

const std::vector<std::vector<std::int64_t>> kGroups = {{81}, {9, 9}, {3, 3, 3, 3}, {125}, {5, 25}, {2, 2, 2, 2, 2, 2}};

void BM_ShiftGaussPhases(benchmark::State& state) {
  const auto chi = diagonal(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(shift_gauss_phases(chi));
  state.SetLabel(chi.group().to_string());
}
BENCHMARK(BM_ShiftGaussPhases)->DenseRange(0, 5);

void BM_ZetaSequencePrin(benchmark::State& state) {
  const auto chi = diagonal(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_sequence(chi, 50));
  state.SetLabel(chi.group().to_string());
}
BENCHMARK(BM_ZetaSequencePrin)->DenseRange(0, 5);

void BM_ZetaClosedSequence(benchmark::State& state) {
  const auto chi = diagonal(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_closed_form_sequence(chi, 50));
  state.SetLabel(chi.group().to_string());
}
BENCHMARK(BM_ZetaClosedSequence)->DenseRange(0, 4);

void BM_ZetaViaPrin(benchmark::State& state) {
  const auto chi = diagonal({3, 3, 3, 3});
  std::int64_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(zeta_via_prin(chi, ++k % 200));
}
BENCHMARK(BM_ZetaViaPrin);

void BM_WallInvariants(benchmark::State& state) {
  const auto chi = diagonal(kGroups[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(wall_invariants(chi));
  state.SetLabel(chi.group().to_string());
}
BENCHMARK(BM_WallInvariants)->DenseRange(0, 4);

void BM_LensSequence(benchmark::State& state) {
  const auto chi = diagonal({9, 9});
  for (auto _ : state) benchmark::DoNotOptimize(harness::lens_sequence(chi, 1, state.range(0)));
}
BENCHMARK(BM_LensSequence)->Arg(64)->Arg(648);

void BM_ClassicalGaussDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classical_gauss_direct(2, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassicalGaussDirect)->DenseRange(1, 5);

void BM_Pentagon(benchmark::State& state) {
  const auto chi = diagonal(std::vector<std::int64_t>(static_cast<std::size_t>(state.range(0)), 2));
  const TYData t(chi, 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_pentagon(t));
  state.SetLabel(chi.group().to_string());
}
BENCHMARK(BM_Pentagon)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Distinguish(benchmark::State& state) {
  harness::ExperimentConfig config;
  config.max_order = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_distinguish(config));
}
BENCHMARK(BM_Distinguish)->Arg(9)->Arg(27)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
