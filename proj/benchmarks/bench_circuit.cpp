#include <benchmark/benchmark.h>

#include "qmoo/circuit.hpp"
#include "qmoo/problems.hpp"
#include "qmoo/rng.hpp"

using namespace qmoo;

// Full objective evaluations at the paper's problem scales.
static void bench_evaluate_params(benchmark::State& state) {
    const auto cls = static_cast<ProblemClass>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    const int n = static_cast<int>(state.range(2));
    const bool exact = state.range(3) != 0;

    const CostTable table(gen_instance(cls, d, n, 0));
    Rng rng(1);
    const int k = table.num_objectives();
    CircuitParams params = CircuitParams::zeros(1, k, d);
    for (auto& g : params.gammas) g = rng.uniform(-3.14, 3.14);
    for (auto& b : params.betas) b = {rng.uniform(-3.14, 3.14), rng.uniform(-3.14, 3.14)};

    const ShotPolicy policy = exact ? ShotPolicy::exact_mode() : ShotPolicy::finite(1024);
    for (auto _ : state) {
        auto result = evaluate_params(table, params, policy, 20, rng);
        benchmark::DoNotOptimize(result.hv);
    }
}
BENCHMARK(bench_evaluate_params)
    ->Args({static_cast<int>(ProblemClass::V), 5, 6, 0})
    ->Args({static_cast<int>(ProblemClass::V), 5, 6, 1})
    ->Args({static_cast<int>(ProblemClass::IV), 3, 8, 0})
    ->Args({static_cast<int>(ProblemClass::II), 2, 13, 0});
