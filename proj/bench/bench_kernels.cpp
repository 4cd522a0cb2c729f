// Serial reference kernels against their OpenMP versions.
//   ./bench_kernels --benchmark_filter=CharSum
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "efg/point_count.hpp"
#include "efg/series.hpp"

namespace {

std::int64_t prime_near(std::int64_t n) {
  while (!efg::is_prime(n)) ++n;
  return n;
}

template <bool Parallel>
void BM_CharSum(benchmark::State& state) {
  const std::int64_t p = prime_near(state.range(0));
  const efg::kernels::CubicModP f{p, 4, 3, p - 7, 11};
  const auto chi = efg::kernels::quadratic_character_table(p);
  for (auto _ : state) {
    auto s = Parallel ? efg::kernels::character_sum_parallel(f, chi)
                      : efg::kernels::character_sum_serial(f, chi);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * p);
}
BENCHMARK(BM_CharSum<false>)->Name("CharSum/serial")->RangeMultiplier(10)->Range(10'000, 10'000'000);
BENCHMARK(BM_CharSum<true>)->Name("CharSum/parallel")->RangeMultiplier(10)->Range(10'000, 10'000'000);

template <bool Parallel>
void BM_Enumerate(benchmark::State& state) {
  const auto m = efg::reduce_model(efg::WeierstrassModel{0, -1, 1, -10, -20},
                                   prime_near(state.range(0)));
  for (auto _ : state) {
    auto n = Parallel ? efg::kernels::count_points_parallel(m) : efg::kernels::count_points_serial(m);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Enumerate<false>)->Name("Enumerate/serial")->Arg(500)->Arg(2000);
BENCHMARK(BM_Enumerate<true>)->Name("Enumerate/parallel")->Arg(500)->Arg(2000);

template <efg::Execution Exec>
void BM_ApTable(benchmark::State& state) {
  const auto m = efg::WeierstrassModel::short_form(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(efg::ap_table(m, state.range(0), Exec));
}
BENCHMARK(BM_ApTable<efg::Execution::serial>)->Name("ApTable/serial")->Arg(2'000)->Arg(10'000);
BENCHMARK(BM_ApTable<efg::Execution::parallel>)->Name("ApTable/parallel")->Arg(2'000)->Arg(10'000);

template <bool Parallel>
void BM_SeriesMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  efg::TruncatedSeries a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = efg::Rational(efg::Integer(static_cast<long>(i) + 1), efg::Integer(static_cast<long>(i % 7) + 2));
    b[i] = efg::Rational(efg::Integer(3 - static_cast<long>(i)), efg::Integer(static_cast<long>(i % 5) + 1));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? efg::series_mul(a, b) : efg::series_mul_serial(a, b));
}
BENCHMARK(BM_SeriesMul<false>)->Name("SeriesMul/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_SeriesMul<true>)->Name("SeriesMul/parallel")->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
