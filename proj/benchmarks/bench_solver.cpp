#include <benchmark/benchmark.h>

#include "ukp/generator.hpp"
#include "ukp/oracle.hpp"
#include "ukp/solver.hpp"

namespace {

ukp::Rational eps_for(int kappa) { return ukp::Rational::pow2(1 - kappa); }

void bench_solve_kappa(benchmark::State& state) {
  const auto instance =
      ukp::generate_instance(1000, 64, 2024, ukp::GenProfile::kCorrelated);
  const ukp::Rational eps = eps_for(static_cast<int>(state.range(0)));
  std::uint64_t tuples = 0;
  for (auto _ : state) {
    const ukp::SolveResult result = ukp::solve(instance, eps);
    tuples = result.stats.tuples_created;
    benchmark::DoNotOptimize(result.profit);
  }
  state.counters["tuples"] = static_cast<double>(tuples);
}
BENCHMARK(bench_solve_kappa)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void bench_solve_n(benchmark::State& state) {
  const auto instance = ukp::generate_instance(static_cast<std::size_t>(state.range(0)), 64,
                                               7, ukp::GenProfile::kCorrelated);
  for (auto _ : state) {
    const ukp::SolveResult result = ukp::solve(instance, ukp::Rational(1, 8));
    benchmark::DoNotOptimize(result.profit);
  }
}
BENCHMARK(bench_solve_n)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

void bench_exact_oracle(benchmark::State& state) {
  const auto instance = ukp::generate_instance(static_cast<std::size_t>(state.range(0)), 64,
                                               7, ukp::GenProfile::kUniform);
  const ukp::GridInstance grid = ukp::to_grid(instance);
  for (auto _ : state) {
    const ukp::OracleSolution solution = ukp::exact_dp(grid);
    benchmark::DoNotOptimize(solution.opt);
  }
}
BENCHMARK(bench_exact_oracle)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
