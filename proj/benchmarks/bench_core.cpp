#include <benchmark/benchmark.h>

#include "mcshms/clustering.hpp"
#include "mcshms/hms.hpp"
#include "mcshms/levy.hpp"
#include "mcshms/mcs.hpp"
#include "mcshms/stats.hpp"
#include "mcshms/test_functions.hpp"

using namespace mcshms;

namespace {

std::vector<Point> random_points(std::size_t n, std::size_t dim) {
    RngStream rng(7);
    std::vector<Point> pts(n, Point(dim));
    for (auto& p : pts)
        for (auto& v : p) v = rng.uniform(-100.0, 100.0);
    return pts;
}

void BM_OneStepKMeans(benchmark::State& state) {
    const auto pts = random_points(50, static_cast<std::size_t>(state.range(0)));
    RngStream rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(one_step_kmeans(pts, 5, rng));
}
BENCHMARK(BM_OneStepKMeans)->Arg(10)->Arg(30)->Arg(100);

void BM_FullKMeans(benchmark::State& state) {
    const auto pts = random_points(50, static_cast<std::size_t>(state.range(0)));
    RngStream rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(full_kmeans(pts, 5, rng));
}
BENCHMARK(BM_FullKMeans)->Arg(10)->Arg(30)->Arg(100);

void BM_LevyVector(benchmark::State& state) {
    RngStream rng(2);
    const auto dim = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(levy_vector(rng, 1.5, dim));
}
BENCHMARK(BM_LevyVector)->Arg(10)->Arg(100);

void BM_WilcoxonExact(benchmark::State& state) {
    RngStream rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.normal() + 0.3;
        y[i] = rng.normal();
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(stats::wilcoxon_signed_rank(x, y, stats::WilcoxonMethod::Exact));
}
BENCHMARK(BM_WilcoxonExact)->Arg(10)->Arg(25);

template <bool Mcs>
void BM_Run(benchmark::State& state) {
    const auto f = functions::make_suite("classic10", 30, 42)[2];
    RunConfig cfg;
    cfg.nfe_max = state.range(0);
    for (auto _ : state) {
        RngStream rng(4);
        benchmark::DoNotOptimize(Mcs ? run_mcs_hms(f, cfg, rng) : run_hms(f, cfg, rng));
    }
}
BENCHMARK(BM_Run<false>)->Name("BM_RunHms")->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Run<true>)->Name("BM_RunMcsHms")->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
