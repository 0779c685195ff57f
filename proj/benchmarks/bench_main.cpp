#include <benchmark/benchmark.h>

#include <vector>

#include "rlab/analysis.hpp"
#include "rlab/corpus.hpp"
#include "rlab/norms.hpp"
#include "rlab/rearrange.hpp"

using namespace rlab;

namespace {

void BM_Rearrangement(benchmark::State& state) {
  Corpus corpus(7);
  const auto f = corpus.signed_function();
  const auto mu = corpus.positive_density();
  for (auto _ : state) benchmark::DoNotOptimize(rearrangement(f, mu));
}
BENCHMARK(BM_Rearrangement);

void BM_LorentzNorm(benchmark::State& state) {
  Corpus corpus(8);
  const auto f = corpus.positive_function();
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_pq_norm(f, 2.0, 3.0));
}
BENCHMARK(BM_LorentzNorm);

void BM_GrandLorentzNorm(benchmark::State& state) {
  Corpus corpus(9);
  const auto f = corpus.positive_function();
  for (auto _ : state) benchmark::DoNotOptimize(grand_lorentz_pq_norm(f, 2.0, 2.0));
}
BENCHMARK(BM_GrandLorentzNorm)->Unit(benchmark::kMillisecond);

void BM_MaximalSample(benchmark::State& state) {
  Corpus corpus(10);
  const auto mf = maximal(corpus.signed_function());
  std::vector<double> xs;
  for (int i = 0; i < state.range(0); ++i) xs.push_back((i + 0.5) / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mf.sample(xs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MaximalSample)->Arg(100)->Arg(1000);

void BM_ConvolveBox(benchmark::State& state) {
  Corpus corpus(11);
  const auto f = corpus.signed_function();
  const ScaledKernel phi_t(Kernel::box(), 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(phi_t, f));
}
BENCHMARK(BM_ConvolveBox);

void BM_ConvolveSmoothBump(benchmark::State& state) {
  Corpus corpus(12);
  const auto f = corpus.signed_function();
  const ScaledKernel phi_t(Kernel::smooth_bump(), 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(phi_t, f));
}
BENCHMARK(BM_ConvolveSmoothBump)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
