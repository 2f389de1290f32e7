#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmoo/nsga2.hpp"
#include "qmoo/rng.hpp"

using namespace qmoo;

namespace {

std::vector<Individual> make_pop(const std::vector<ObjectiveVector>& objectives) {
    std::vector<Individual> pop(objectives.size());
    for (std::size_t i = 0; i < objectives.size(); ++i) pop[i].objectives = objectives[i];
    return pop;
}

}  // namespace

TEST_CASE("fast non-dominated sort") {
    SUBCASE("mutually non-dominated population is a single front") {
        const auto pop = make_pop({{0.1, 0.9}, {0.5, 0.5}, {0.9, 0.1}});
        const auto fronts = fast_non_dominated_sort(pop);
        REQUIRE(fronts.size() == 1);
        CHECK(fronts[0].size() == 3);
    }
    SUBCASE("a totally ordered chain gives singleton fronts") {
        const auto pop = make_pop({{0.4, 0.4}, {0.1, 0.1}, {0.3, 0.3}, {0.2, 0.2}});
        const auto fronts = fast_non_dominated_sort(pop);
        REQUIRE(fronts.size() == 4);
        for (const auto& f : fronts) CHECK(f.size() == 1);
        CHECK(fronts[0][0] == 1);  // (0.1, 0.1) first
    }
    SUBCASE("fronts match repeated non-dominated filtering") {
        Rng rng(3);
        std::vector<ObjectiveVector> pts(12, ObjectiveVector(2));
        for (auto& p : pts)
            for (auto& v : p) v = rng.uniform01();
        const auto pop = make_pop(pts);
        const auto fronts = fast_non_dominated_sort(pop);

        // peel fronts with the moo-core filter as the oracle
        std::vector<int> remaining(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) remaining[i] = static_cast<int>(i);
        for (const auto& front : fronts) {
            std::vector<ObjectiveVector> pool;
            for (int i : remaining) pool.push_back(pts[i]);
            const ParetoFront expected = non_dominated_filter(pool);

            std::vector<ObjectiveVector> got;
            for (int i : front) got.push_back(pts[i]);
            // same multiset of points (duplicates aside, random reals are distinct)
            auto sorted_expected = expected.points;
            auto sorted_got = got;
            std::sort(sorted_expected.begin(), sorted_expected.end());
            std::sort(sorted_got.begin(), sorted_got.end());
            CHECK(sorted_got == sorted_expected);

            std::vector<int> next;
            for (int i : remaining)
                if (std::find(front.begin(), front.end(), i) == front.end()) next.push_back(i);
            remaining = next;
        }
        CHECK(remaining.empty());
    }
}

TEST_CASE("crowding distance") {
    SUBCASE("fronts of size <= 2 are all infinite") {
        const auto pop = make_pop({{0.1, 0.9}, {0.9, 0.1}});
        const std::vector<int> front = {0, 1};
        for (double d : crowding_distance(pop, front))
            CHECK(d == std::numeric_limits<double>::infinity());
    }
    SUBCASE("equally spaced collinear points: middle gets 2") {
        const auto pop = make_pop({{0.1, 0.9}, {0.5, 0.5}, {0.9, 0.1}});
        const std::vector<int> front = {0, 1, 2};
        const auto dist = crowding_distance(pop, front);
        CHECK(dist[0] == std::numeric_limits<double>::infinity());
        CHECK(dist[2] == std::numeric_limits<double>::infinity());
        CHECK(dist[1] == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("a duplicate surrounded by equal vectors gets zero") {
        const auto pop =
            make_pop({{0.1, 0.9}, {0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}, {0.9, 0.1}});
        const std::vector<int> front = {0, 1, 2, 3, 4};
        const auto dist = crowding_distance(pop, front);
        // the middle duplicate has identical neighbors in every objective
        CHECK(dist[2] == 0.0);
        CHECK(dist[0] == std::numeric_limits<double>::infinity());
        CHECK(dist[4] == std::numeric_limits<double>::infinity());
    }
}

TEST_CASE("nsga2 run") {
    SUBCASE("archive best HV never decreases and genomes stay feasible") {
        const CostTable table(gen_instance(ProblemClass::II, 3, 5, 2));
        MoeaConfig cfg;
        cfg.iterations = 60;
        cfg.seed = 5;
        const NsgaResult res = run_nsga2(table, cfg);
        REQUIRE(res.trace.points.size() == 60u);  // one row per generation
        CHECK(res.trace.points.front().iteration == 1);
        CHECK(res.trace.points.back().iteration == 60);
        double prev = -1.0;
        for (const auto& p : res.trace.points) {
            CHECK(p.best_value >= prev - 1e-15);
            prev = p.best_value;
        }
        for (std::size_t i = 0; i < res.front.size(); ++i) {
            CHECK(res.front.source_indices[i] < table.dim());
        }
    }
    SUBCASE("deterministic per seed") {
        const CostTable table(gen_instance(ProblemClass::I, 2, 6, 1));
        MoeaConfig cfg;
        cfg.iterations = 30;
        cfg.seed = 9;
        const NsgaResult a = run_nsga2(table, cfg);
        const NsgaResult b = run_nsga2(table, cfg);
        REQUIRE(a.trace.points.size() == b.trace.points.size());
        for (std::size_t i = 0; i < a.trace.points.size(); ++i)
            CHECK(a.trace.points[i].value == b.trace.points[i].value);
        CHECK(a.front.points == b.front.points);
    }
    SUBCASE("finds the oracle front on a tiny instance in most seeded runs") {
        const CostTable table(gen_instance(ProblemClass::II, 2, 4, 3));
        const ParetoFront oracle = brute_force_pareto(table);
        int contained = 0;
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            MoeaConfig cfg;
            cfg.seed = seed;
            const NsgaResult res = run_nsga2(table, cfg);
            bool subset = true;
            for (const auto& p : res.front.points) {
                bool found = false;
                for (const auto& q : oracle.points)
                    if (p == q) {
                        found = true;
                        break;
                    }
                if (!found) subset = false;
            }
            if (subset) ++contained;
        }
        CHECK(contained >= 35);
    }
    SUBCASE("rank correctness: no one in front i is dominated by front j > i") {
        const CostTable table(gen_instance(ProblemClass::IV, 3, 4, 7));
        Rng rng(13);
        std::vector<Individual> pop(30);
        const QuditRegister reg(3, 4);
        for (auto& ind : pop) {
            ind.genome.resize(4);
            for (auto& g : ind.genome) g = static_cast<int>(rng.below(3));
            ind.objectives = table.objective_vector(encode(ind.genome, reg));
        }
        const auto fronts = fast_non_dominated_sort(pop);
        for (std::size_t fi = 0; fi < fronts.size(); ++fi)
            for (std::size_t fj = fi + 1; fj < fronts.size(); ++fj)
                for (int a : fronts[fi])
                    for (int b : fronts[fj])
                        CHECK_FALSE(strictly_dominates(pop[b].objectives, pop[a].objectives));
    }
    SUBCASE("odd population is rejected") {
        const CostTable table(gen_instance(ProblemClass::I, 2, 3, 0));
        MoeaConfig cfg;
        cfg.population = 7;
        CHECK_THROWS_AS(run_nsga2(table, cfg), std::domain_error);
    }
}
