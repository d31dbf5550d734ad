// Serial reference vs OpenMP path for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "chpi/approximants.hpp"
#include "chpi/kernels.hpp"
#include "chpi/series_brackets.hpp"

namespace {

using chpi::Execution;

const chpi::PrecisionContext kCtx = chpi::default_context();

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_CertifyTheorem(benchmark::State& state) {
  std::vector<chpi::SideCount> ns;
  for (chpi::SideCount n = 32; n < 32 + 256; ++n) {
    ns.push_back(n);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(chpi::certify_theorem(ns, kCtx, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ns.size()));
}

void BM_LemmaGrid(benchmark::State& state) {
  const auto xs = chpi::geometric_grid(64, kCtx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chpi::check_lemma_grid(xs, kCtx, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
}

void BM_ChTable(benchmark::State& state) {
  constexpr std::size_t kRows = 256;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chpi::map_indexed(kRows, mode(state), [](std::size_t i) {
      return chpi::ch_approx(static_cast<chpi::SideCount>(32 + i), kCtx);
    }));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(kRows));
}

}  // namespace

BENCHMARK(BM_CertifyTheorem)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LemmaGrid)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChTable)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
