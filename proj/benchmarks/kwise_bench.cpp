#include <benchmark/benchmark.h>

#include "kwise/approx.hpp"
#include "kwise/extremal.hpp"
#include "kwise/gram.hpp"

namespace {

void BM_GramRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kwise::build_basis_recurrence(n, std::min(n - 1, 30)));
}
BENCHMARK(BM_GramRecurrence)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_GramSchmidt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kwise::build_basis_gs(n, std::min(n - 1, 30)));
}
BENCHMARK(BM_GramSchmidt)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_MinimaxLp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  const auto grid = kwise::grid_points(kwise::GridKind::kOut, n);
  const auto target = kwise::Polynomial::monomial(k);
  for (auto _ : state) benchmark::DoNotOptimize(kwise::linf_best_approx(target, grid, k - 1));
}
BENCHMARK(BM_MinimaxLp)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_PairLp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  for (auto _ : state) benchmark::DoNotOptimize(kwise::extremal_pair_for_test(n, k, k / 2));
}
BENCHMARK(BM_PairLp)->Arg(8)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnumerateTv(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kwise::extremal_tv(20, k, kwise::TvMode::kEnumerate));
}
BENCHMARK(BM_EnumerateTv)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AlternateTv(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kwise::extremal_tv(20, k, kwise::TvMode::kAlternate));
}
BENCHMARK(BM_AlternateTv)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
