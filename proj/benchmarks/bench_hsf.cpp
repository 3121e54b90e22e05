#include <benchmark/benchmark.h>

#include "hsf/longitudinal.hpp"
#include "hsf/oracle.hpp"
#include "hsf/specfun.hpp"

namespace {

void BM_Digamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsf::digamma(x));
        x += 0.37;
        if (x > 90.0) x = 0.1;
    }
}
BENCHMARK(BM_Digamma);

void BM_KummerTerminating(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsf::kummer_f(-8.0, 2.0, 14.5));
    }
}
BENCHMARK(BM_KummerTerminating);

void BM_KummerSeries(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsf::kummer_f(0.7, 2.0, 35.0));
    }
}
BENCHMARK(BM_KummerSeries);

void BM_UPlus(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsf::u_plus(2.103959956748, z));
    }
}
BENCHMARK(BM_UPlus)->Arg(2)->Arg(18)->Arg(60);

void BM_SolveEvenNu(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsf::solve_even_nu(k, 10.0));
    }
}
BENCHMARK(BM_SolveEvenNu)->Arg(0)->Arg(1)->Arg(3);

void BM_CountNodes(benchmark::State& state) {
    const auto level = hsf::solve_even_nu(2, 10.0);
    const double z_max = 4.0 * level.nu * (level.k + 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsf::count_nodes(level, z_max, 2000));
    }
}
BENCHMARK(BM_CountNodes);

void BM_OracleOddGround(benchmark::State& state) {
    // coarsened grid so a single iteration stays in benchmark territory
    hsf::ShootingConfig cfg{5e-3, 40.0, 2.5e-4, 1e-8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsf::ode_eigenvalue(hsf::Parity::odd, 1, cfg));
    }
}
BENCHMARK(BM_OracleOddGround)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
