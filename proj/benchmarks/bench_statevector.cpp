#include <benchmark/benchmark.h>

#include "qmoo/operators.hpp"
#include "qmoo/rng.hpp"
#include "qmoo/statevector.hpp"

using namespace qmoo;

static void bench_phase_application(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const QuditRegister reg(d, n);
    StateVector psi = StateVector::uniform(reg);
    Rng rng(7);
    std::vector<double> costs(reg.dim);
    for (auto& c : costs) c = rng.uniform01();
    double gamma = 0.3;
    for (auto _ : state) {
        psi.apply_scaled_diagonal_phase(gamma, costs);
        gamma += 1e-6;
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reg.dim));
}
BENCHMARK(bench_phase_application)->Args({5, 6})->Args({3, 9})->Args({2, 13});

static void bench_local_unitary_all(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const QuditRegister reg(d, n);
    StateVector psi = StateVector::uniform(reg);
    const Eigen::MatrixXcd mixer = mixer_matrix(d, 0.4, 0.7);
    for (auto _ : state) {
        psi.apply_local_unitary_all(mixer);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reg.dim) * n);
}
BENCHMARK(bench_local_unitary_all)->Args({5, 6})->Args({3, 9})->Args({2, 13});

static void bench_sampling(benchmark::State& state) {
    const QuditRegister reg(5, 6);
    StateVector psi = StateVector::uniform(reg);
    Rng rng(3);
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto counts = sample(psi, shots, rng);
        benchmark::DoNotOptimize(counts.total);
    }
}
BENCHMARK(bench_sampling)->Arg(128)->Arg(1024)->Arg(16384);

BENCHMARK_MAIN();
