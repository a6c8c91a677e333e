#include <terrace/frechet.hpp>
#include <terrace/oracle.hpp>
#include <terrace/projections.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace terrace;

void BM_BoundaryDistributionsGeneral(benchmark::State& state) {
  const auto m = random_marginals(static_cast<std::size_t>(state.range(0)), 7, false);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_distributions(m, BoundPath::General));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(power_set_size(m.size())));
}
BENCHMARK(BM_BoundaryDistributionsGeneral)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_BoundaryDistributionsHalfRare(benchmark::State& state) {
  const auto m = random_marginals(static_cast<std::size_t>(state.range(0)), 7, true);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_distributions(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(power_set_size(m.size())));
}
BENCHMARK(BM_BoundaryDistributionsHalfRare)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_BoundsViaProjection(benchmark::State& state) {
  const auto m = random_marginals(static_cast<std::size_t>(state.range(0)), 7, false);
  for (auto _ : state) benchmark::DoNotOptimize(bounds_via_projection(m));
}
BENCHMARK(BM_BoundsViaProjection)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_IndependentEpd(benchmark::State& state) {
  const auto m = random_marginals(static_cast<std::size_t>(state.range(0)), 7, false);
  for (auto _ : state) benchmark::DoNotOptimize(independent_epd(m));
}
BENCHMARK(BM_IndependentEpd)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_LowerBoundGeneralSingle(benchmark::State& state) {
  const auto m = random_marginals(20, 7, false);
  const SubsetIndex x{0x5a5a5};
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound_general(x, m));
}
BENCHMARK(BM_LowerBoundGeneralSingle);

}  // namespace
