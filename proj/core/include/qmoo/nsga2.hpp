#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmoo/moo.hpp"
#include "qmoo/optimizers.hpp"
#include "qmoo/problems.hpp"

namespace qmoo {

struct Individual {
    std::vector<int> genome;  // digits in [0, d)
    ObjectiveVector objectives;
    int rank = 0;
    double crowding = 0.0;
};

/// Integer-coded NSGA-II with binary tournament on (rank, crowding), uniform
/// crossover and random-reset mutation. mutation_rate < 0 means 1/N.
struct MoeaConfig {
    int population = 20;  // must be even
    int iterations = 200;
    double crossover_rate = 0.9;
    double gene_swap_prob = 0.5;
    double mutation_rate = -1.0;
    int tournament_size = 2;
    std::uint64_t seed = 0;
};

/// Deb's fast non-dominated sort: returns fronts as index lists; front 0 is
/// the non-dominated set, front i+1 is non-dominated after removing fronts
/// <= i.
std::vector<std::vector<int>> fast_non_dominated_sort(std::span<const Individual> pop);

/// Crowding distances within one front (indices into pop). Boundary
/// individuals per objective get +inf, interior ones the summed normalized
/// neighbor gaps.
std::vector<double> crowding_distance(std::span<const Individual> pop,
                                      std::span<const int> front);

struct NsgaResult {
    ParetoFront front;  // final population's non-dominated set
    Trace trace;        // per iteration: HV of current non-dominated set
};

NsgaResult run_nsga2(const CostTable& table, const MoeaConfig& cfg);

}  // namespace qmoo
