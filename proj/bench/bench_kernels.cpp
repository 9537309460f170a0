// OpenMP kernels against the serial reference on the L = 4 lognormal preset.

#include <benchmark/benchmark.h>

#include "ceis/ce.hpp"
#include "ceis/kernels.hpp"

namespace {

std::vector<ceis::BranchDensity> branches() {
  std::vector<ceis::BranchParams> p;
  for (double lambda : {0.5389, 0.9786, 0.4854, 0.224}) {
    p.push_back(ceis::BranchParams::exp_lognormal(0.2045, lambda, 0.1117, 0.0253));
  }
  return ceis::make_densities(p);
}

const std::vector<double> kNu{0.02, 0.02, 0.02, 0.02};
constexpr double kGamma0 = 0.1;

void BM_NaiveReference(benchmark::State& state) {
  const auto b = branches();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceis::reference::naive_terms(b, kGamma0, state.range(0), 7, 8));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NaiveOmp(benchmark::State& state) {
  const auto b = branches();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceis::kernels::naive_terms(b, kGamma0, state.range(0), 7, 8));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ImportanceReference(benchmark::State& state) {
  const auto b = branches();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceis::reference::is_terms(b, kNu, kGamma0, state.range(0), 7, 8));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ImportanceOmp(benchmark::State& state) {
  const auto b = branches();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceis::kernels::is_terms(b, kNu, kGamma0, state.range(0), 7, 8));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PilotBlockReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceis::reference::sample_biased_block(kNu, state.range(0), 7, 8));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PilotBlockOmp(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceis::kernels::sample_biased_block(kNu, state.range(0), 7, 8));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_NaiveReference)->Arg(1 << 18);
BENCHMARK(BM_NaiveOmp)->Arg(1 << 18);
BENCHMARK(BM_ImportanceReference)->Arg(1 << 18);
BENCHMARK(BM_ImportanceOmp)->Arg(1 << 18);
BENCHMARK(BM_PilotBlockReference)->Arg(1 << 16);
BENCHMARK(BM_PilotBlockOmp)->Arg(1 << 16);

BENCHMARK_MAIN();
