#include <benchmark/benchmark.h>

#include "qmoo/moo.hpp"
#include "qmoo/rng.hpp"

using namespace qmoo;

namespace {

std::vector<ObjectiveVector> random_points(int k, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ObjectiveVector> pts(n, ObjectiveVector(k));
    for (auto& p : pts)
        for (auto& v : p) v = rng.uniform01();
    return pts;
}

}  // namespace

static void bench_hypervolume(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto pts = random_points(k, n, 11);
    const ObjectiveVector ref(k, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hypervolume(pts, ref));
    }
}
BENCHMARK(bench_hypervolume)
    ->Args({2, 20})
    ->Args({3, 20})
    ->Args({5, 20})
    ->Args({2, 500})
    ->Args({3, 500})
    ->Args({5, 200});

static void bench_non_dominated_filter(benchmark::State& state) {
    const auto pts = random_points(3, static_cast<std::size_t>(state.range(0)), 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(non_dominated_filter(pts).size());
    }
}
BENCHMARK(bench_non_dominated_filter)->Arg(20)->Arg(200);
