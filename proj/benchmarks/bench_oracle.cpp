#include <terrace/oracle.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace terrace;

void BM_LpExtremizeEmptySet(benchmark::State& state) {
  const auto m = random_marginals(static_cast<std::size_t>(state.range(0)), 3, false);
  for (auto _ : state) benchmark::DoNotOptimize(lp_extremize_terrace(SubsetIndex::empty(), m, Direction::Max));
}
BENCHMARK(BM_LpExtremizeEmptySet)->DenseRange(2, 6, 1)->Unit(benchmark::kMicrosecond);

void BM_VerifyBounds(benchmark::State& state) {
  const auto m = random_marginals(static_cast<std::size_t>(state.range(0)), 3, false);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bounds(m));
}
BENCHMARK(BM_VerifyBounds)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

void BM_VerifyBoundsParallel(benchmark::State& state) {
  const auto m = random_marginals(6, 3, false);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bounds(m, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_VerifyBoundsParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
