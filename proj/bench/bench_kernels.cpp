// Serial against OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include "supercong/gamma.hpp"
#include "supercong/kernels.hpp"

using namespace supercong;

namespace {

void strided_product(benchmark::State& state, Execution exec) {
  const std::uint64_t p = 7;
  const BigInt modulus = 282475249;  // 7^10
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = kernels::strided_product(exec, 1, 1, count, p, modulus, kernels::FactorMode::Skip);
    benchmark::DoNotOptimize(r.unit);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}

void ramanujan_sum(benchmark::State& state, Execution exec) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto s = kernels::ramanujan_sum(exec, m, 3, 12);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m));
}

void gamma_quarter(benchmark::State& state, Execution exec) {
  const auto ctx = make_context(3, static_cast<int>(state.range(0)));
  const Rational x(1, 4);
  for (auto _ : state) {
    clear_gamma_cache();
    auto g = gamma_rational(x, ctx, exec);
    benchmark::DoNotOptimize(g);
  }
}

}  // namespace

BENCHMARK_CAPTURE(strided_product, serial, Execution::Serial)->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(strided_product, parallel, Execution::Parallel)->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(ramanujan_sum, serial, Execution::Serial)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(ramanujan_sum, parallel, Execution::Parallel)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(gamma_quarter, serial, Execution::Serial)->DenseRange(6, 12, 3);
BENCHMARK_CAPTURE(gamma_quarter, parallel, Execution::Parallel)->DenseRange(6, 12, 3);

BENCHMARK_MAIN();
