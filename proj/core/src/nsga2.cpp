#include "qmoo/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qmoo/rng.hpp"

namespace qmoo {

std::vector<std::vector<int>> fast_non_dominated_sort(std::span<const Individual> pop) {
    const int n = static_cast<int>(pop.size());
    std::vector<std::vector<int>> dominates(n);
    std::vector<int> dominated_by(n, 0);
    std::vector<std::vector<int>> fronts;

    std::vector<int> first;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (strictly_dominates(pop[i].objectives, pop[j].objectives))
                dominates[i].push_back(j);
            else if (strictly_dominates(pop[j].objectives, pop[i].objectives))
                ++dominated_by[i];
        }
        if (dominated_by[i] == 0) first.push_back(i);
    }
    fronts.push_back(std::move(first));

    std::size_t current = 0;
    while (current < fronts.size() && !fronts[current].empty()) {
        std::vector<int> next;
        for (int i : fronts[current]) {
            for (int j : dominates[i]) {
                if (--dominated_by[j] == 0) next.push_back(j);
            }
        }
        if (next.empty()) break;
        fronts.push_back(std::move(next));
        ++current;
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const Individual> pop,
                                      std::span<const int> front) {
    const int m = static_cast<int>(front.size());
    if (m < 1) throw std::domain_error("crowding_distance: empty front");
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(m, 0.0);
    if (m <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    const int k = static_cast<int>(pop[front[0]].objectives.size());
    std::vector<int> order(m);
    for (int obj = 0; obj < k; ++obj) {
        for (int i = 0; i < m; ++i) order[i] = i;
        // index tie-break keeps equal vectors in the same relative order for
        // every objective (and makes the sort deterministic)
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double va = pop[front[a]].objectives[obj];
            const double vb = pop[front[b]].objectives[obj];
            if (va != vb) return va < vb;
            return a < b;
        });
        const double lo = pop[front[order[0]]].objectives[obj];
        const double hi = pop[front[order[m - 1]]].objectives[obj];
        dist[order[0]] = inf;
        dist[order[m - 1]] = inf;
        const double range = hi - lo;
        if (range <= 0.0) continue;
        for (int i = 1; i + 1 < m; ++i) {
            if (dist[order[i]] == inf) continue;
            dist[order[i]] += (pop[front[order[i + 1]]].objectives[obj] -
                               pop[front[order[i - 1]]].objectives[obj]) /
                              range;
        }
    }
    return dist;
}

namespace {

void evaluate(Individual& ind, const CostTable& table, const QuditRegister& reg) {
    const BasisIndex x = encode(ind.genome, reg);
    ind.objectives = table.objective_vector(x);
}

// (rank, crowding) comparison: lower rank wins, then larger crowding.
bool better(const Individual& a, const Individual& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.crowding > b.crowding;
}

void assign_ranks_and_crowding(std::vector<Individual>& pop) {
    const auto fronts = fast_non_dominated_sort(pop);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        for (int i : fronts[r]) pop[i].rank = static_cast<int>(r);
        const auto dist = crowding_distance(pop, fronts[r]);
        for (std::size_t t = 0; t < fronts[r].size(); ++t) pop[fronts[r][t]].crowding = dist[t];
    }
}

}  // namespace

NsgaResult run_nsga2(const CostTable& table, const MoeaConfig& cfg) {
    if (cfg.population < 2 || cfg.population % 2 != 0)
        throw std::domain_error("run_nsga2: population must be even and >= 2");
    const int n = table.num_vars();
    const int d = table.d();
    const QuditRegister reg(d, n);
    const double mutation_rate = cfg.mutation_rate < 0.0 ? 1.0 / n : cfg.mutation_rate;
    Rng rng(cfg.seed);

    std::vector<Individual> pop(cfg.population);
    for (auto& ind : pop) {
        ind.genome.resize(n);
        for (int i = 0; i < n; ++i) ind.genome[i] = static_cast<int>(rng.below(d));
        evaluate(ind, table, reg);
    }
    assign_ranks_and_crowding(pop);

    const ObjectiveVector ref(table.num_objectives(), 1.0);
    NsgaResult result;
    std::size_t evals = cfg.population;
    double best_hv = -std::numeric_limits<double>::infinity();

    // one row per generation, 1..iterations
    const auto record_iteration = [&](int iteration) {
        std::vector<ObjectiveVector> nd;
        for (const auto& ind : pop)
            if (ind.rank == 0) nd.push_back(ind.objectives);
        const double hv = hypervolume(nd, ref);
        best_hv = std::max(best_hv, hv);
        TracePoint p;
        p.iteration = iteration;
        p.value = hv;
        p.best_value = best_hv;
        p.evaluations = evals;
        result.trace.points.push_back(std::move(p));
    };

    const auto tournament = [&]() -> const Individual& {
        const Individual* winner = &pop[rng.below(pop.size())];
        for (int t = 1; t < cfg.tournament_size; ++t) {
            const Individual& challenger = pop[rng.below(pop.size())];
            if (better(challenger, *winner)) winner = &challenger;
        }
        return *winner;
    };

    for (int iter = 1; iter <= cfg.iterations; ++iter) {
        std::vector<Individual> offspring;
        offspring.reserve(cfg.population);
        while (static_cast<int>(offspring.size()) < cfg.population) {
            const Individual& p1 = tournament();
            const Individual& p2 = tournament();
            Individual c1, c2;
            c1.genome = p1.genome;
            c2.genome = p2.genome;
            if (rng.uniform01() < cfg.crossover_rate) {
                for (int i = 0; i < n; ++i)
                    if (rng.uniform01() < cfg.gene_swap_prob) std::swap(c1.genome[i], c2.genome[i]);
            }
            for (auto* child : {&c1, &c2}) {
                for (int i = 0; i < n; ++i)
                    if (rng.uniform01() < mutation_rate)
                        child->genome[i] = static_cast<int>(rng.below(d));
                evaluate(*child, table, reg);
                ++evals;
            }
            offspring.push_back(std::move(c1));
            if (static_cast<int>(offspring.size()) < cfg.population)
                offspring.push_back(std::move(c2));
        }

        // elitist environmental selection from parents + offspring
        std::vector<Individual> merged;
        merged.reserve(pop.size() + offspring.size());
        for (auto& ind : pop) merged.push_back(std::move(ind));
        for (auto& ind : offspring) merged.push_back(std::move(ind));

        const auto fronts = fast_non_dominated_sort(merged);
        std::vector<Individual> next;
        next.reserve(cfg.population);
        for (std::size_t r = 0; r < fronts.size() && static_cast<int>(next.size()) < cfg.population;
             ++r) {
            const auto dist = crowding_distance(merged, fronts[r]);
            std::vector<int> idx(fronts[r].size());
            for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = static_cast<int>(t);
            const int room = cfg.population - static_cast<int>(next.size());
            if (static_cast<int>(fronts[r].size()) > room) {
                std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                    if (dist[a] != dist[b]) return dist[a] > dist[b];
                    return fronts[r][a] < fronts[r][b];
                });
                idx.resize(room);
            }
            for (int t : idx) {
                Individual ind = std::move(merged[fronts[r][t]]);
                ind.rank = static_cast<int>(r);
                ind.crowding = dist[t];
                next.push_back(std::move(ind));
            }
        }
        pop = std::move(next);
        assign_ranks_and_crowding(pop);
        record_iteration(iter);
    }

    std::vector<ObjectiveVector> final_points;
    std::vector<BasisIndex> final_indices;
    for (const auto& ind : pop) {
        if (ind.rank != 0) continue;
        final_points.push_back(ind.objectives);
        final_indices.push_back(encode(ind.genome, reg));
    }
    result.front = non_dominated_filter(final_points, final_indices);
    return result;
}

}  // namespace qmoo
