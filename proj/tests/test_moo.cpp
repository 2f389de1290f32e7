#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qmoo/moo.hpp"
#include "qmoo/problems.hpp"
#include "qmoo/rng.hpp"

using namespace qmoo;

namespace {

std::vector<ObjectiveVector> random_points(int k, std::size_t n, Rng& rng, double lo = 0.0,
                                           double hi = 1.0) {
    std::vector<ObjectiveVector> pts(n, ObjectiveVector(k));
    for (auto& p : pts)
        for (auto& v : p) v = rng.uniform(lo, hi);
    return pts;
}

// Monte-Carlo hypervolume oracle: fraction of uniform samples in [0,1]^K
// dominated by the set.
std::pair<double, double> mc_hypervolume(const std::vector<ObjectiveVector>& pts, int k,
                                         std::size_t n_samples, Rng& rng) {
    std::size_t hits = 0;
    ObjectiveVector y(k);
    for (std::size_t s = 0; s < n_samples; ++s) {
        for (int j = 0; j < k; ++j) y[j] = rng.uniform01();
        for (const auto& p : pts) {
            bool dominates = true;
            for (int j = 0; j < k; ++j) {
                if (p[j] > y[j]) {
                    dominates = false;
                    break;
                }
            }
            if (dominates) {
                ++hits;
                break;
            }
        }
    }
    const double est = static_cast<double>(hits) / static_cast<double>(n_samples);
    const double se = std::sqrt(est * (1.0 - est) / static_cast<double>(n_samples));
    return {est, se};
}

}  // namespace

TEST_CASE("dominance relations") {
    CHECK(weakly_dominates({0.2, 0.3}, {0.2, 0.5}));
    CHECK_FALSE(weakly_dominates({0.2, 0.6}, {0.3, 0.5}));
    CHECK(weakly_dominates({0.4, 0.4}, {0.4, 0.4}));
    CHECK(strictly_dominates({0.2, 0.3}, {0.2, 0.5}));
    CHECK_FALSE(strictly_dominates({0.4, 0.4}, {0.4, 0.4}));
    CHECK_THROWS_AS(weakly_dominates({0.1}, {0.1, 0.2}), std::domain_error);
}

TEST_CASE("non-dominated filter") {
    SUBCASE("mutually incomparable points are all retained") {
        const std::vector<ObjectiveVector> pts = {{0.1, 0.9}, {0.9, 0.1}, {0.5, 0.5}};
        CHECK(non_dominated_filter(pts).size() == 3);
    }
    SUBCASE("strictly dominated points are dropped") {
        const std::vector<ObjectiveVector> pts = {{0.1, 0.1}, {0.2, 0.2}};
        const ParetoFront front = non_dominated_filter(pts);
        REQUIRE(front.size() == 1);
        CHECK(front.points[0] == ObjectiveVector{0.1, 0.1});
    }
    SUBCASE("filter is idempotent") {
        Rng rng(3);
        const auto pts = random_points(3, 40, rng);
        const ParetoFront once = non_dominated_filter(pts);
        const ParetoFront twice = non_dominated_filter(once.points);
        CHECK(once.points == twice.points);
    }
    SUBCASE("duplicates collapse to one representative") {
        const std::vector<ObjectiveVector> pts = {{0.3, 0.3}, {0.3, 0.3}};
        const std::vector<BasisIndex> src = {7, 9};
        const ParetoFront front = non_dominated_filter(pts, src);
        REQUIRE(front.size() == 1);
        CHECK(front.source_indices == std::vector<BasisIndex>{7});
    }
}

TEST_CASE("hypervolume on known sets") {
    const ObjectiveVector r{1.0, 1.0};
    CHECK(hypervolume(std::vector<ObjectiveVector>{{0.5, 0.5}}, r) ==
          doctest::Approx(0.25).epsilon(1e-14));
    // 0.32 + 0.32 - 0.16 by inclusion-exclusion
    CHECK(hypervolume(std::vector<ObjectiveVector>{{0.2, 0.6}, {0.6, 0.2}}, r) ==
          doctest::Approx(0.48).epsilon(1e-14));
    CHECK(hypervolume(std::vector<ObjectiveVector>{}, r) == 0.0);
    CHECK(hypervolume(std::vector<ObjectiveVector>{{0.5, 0.5}, {0.6, 0.6}}, r) ==
          doctest::Approx(0.25).epsilon(1e-14));
    // points at or beyond the reference contribute nothing
    CHECK(hypervolume(std::vector<ObjectiveVector>{{1.0, 0.2}, {2.0, 0.1}}, r) == 0.0);
    CHECK_THROWS_AS(hypervolume(std::vector<ObjectiveVector>{{0.1}}, ObjectiveVector{1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(hypervolume(std::vector<ObjectiveVector>{{0.1, 0.2, 0.3}}, r),
                    std::domain_error);
}

TEST_CASE("sweep and reference recursion agree at K=2") {
    Rng rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        const auto pts = random_points(2, 1 + rng.below(30), rng, -0.2, 1.2);
        const ObjectiveVector r{1.0, 1.0};
        CHECK(hypervolume(pts, r) == doctest::Approx(hypervolume_wfg(pts, r)).epsilon(1e-12));
    }
}

TEST_CASE("3d sweep agrees with the reference recursion") {
    Rng rng(12);
    for (int rep = 0; rep < 150; ++rep) {
        const auto pts = random_points(3, 1 + rng.below(25), rng);
        const ObjectiveVector r{1.0, 1.0, 1.0};
        CHECK(hypervolume(pts, r) == doctest::Approx(hypervolume_wfg(pts, r)).epsilon(1e-12));
    }
}

TEST_CASE("5d dispatch agrees with the reference recursion") {
    Rng rng(14);
    for (int rep = 0; rep < 40; ++rep) {
        const auto pts = random_points(5, 1 + rng.below(18), rng);
        const ObjectiveVector r(5, 1.0);
        CHECK(hypervolume(pts, r) == doctest::Approx(hypervolume_wfg(pts, r)).epsilon(1e-12));
    }
}

TEST_CASE("hypervolume matches Monte Carlo for K in {2,3,5}") {
    Rng rng(21);
    for (int k : {2, 3, 5}) {
        const auto pts = random_points(k, 20, rng);
        const double exact = hypervolume(pts, ObjectiveVector(k, 1.0));
        Rng mc_rng(1000 + k);
        const auto [est, se] = mc_hypervolume(pts, k, 200000, mc_rng);
        CHECK(std::abs(exact - est) < 4.0 * se + 1e-9);
    }
}

TEST_CASE("hypervolume properties") {
    Rng rng(31);
    SUBCASE("Pareto compliance: a strictly better set has larger HV") {
        for (int rep = 0; rep < 200; ++rep) {
            const int k = 2 + static_cast<int>(rng.below(4));
            const ObjectiveVector r(k, 1.0);
            const auto b = random_points(k, 1 + rng.below(10), rng, 0.3, 0.95);
            std::vector<ObjectiveVector> a = b;
            for (auto& p : a)
                for (auto& v : p) v -= rng.uniform(0.01, 0.2);
            CHECK(hypervolume(a, r) > hypervolume(b, r));
        }
    }
    SUBCASE("monotone under adding points") {
        for (int rep = 0; rep < 100; ++rep) {
            const int k = 2 + static_cast<int>(rng.below(4));
            const ObjectiveVector r(k, 1.0);
            auto pts = random_points(k, 1 + rng.below(15), rng);
            const double before = hypervolume(pts, r);
            pts.push_back(random_points(k, 1, rng)[0]);
            CHECK(hypervolume(pts, r) >= before - 1e-15);
        }
    }
    SUBCASE("invariant under coordinate permutation") {
        for (int rep = 0; rep < 50; ++rep) {
            const int k = 3 + static_cast<int>(rng.below(3));
            const ObjectiveVector r(k, 1.0);
            auto pts = random_points(k, 12, rng);
            std::vector<int> perm(k);
            for (int j = 0; j < k; ++j) perm[j] = j;
            for (int j = k - 1; j > 0; --j)
                std::swap(perm[j], perm[rng.below(static_cast<std::uint64_t>(j + 1))]);
            std::vector<ObjectiveVector> permuted = pts;
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (int j = 0; j < k; ++j) permuted[i][j] = pts[i][perm[j]];
            CHECK(hypervolume(pts, r) == doctest::Approx(hypervolume(permuted, r)).epsilon(1e-12));
        }
    }
    SUBCASE("equals HV of the filtered set exactly") {
        for (int rep = 0; rep < 50; ++rep) {
            const int k = 2 + static_cast<int>(rng.below(4));
            const ObjectiveVector r(k, 1.0);
            const auto pts = random_points(k, 25, rng);
            CHECK(hypervolume(pts, r) == hypervolume(non_dominated_filter(pts).points, r));
        }
    }
    SUBCASE("invariant to point order") {
        const int k = 4;
        const ObjectiveVector r(k, 1.0);
        auto pts = random_points(k, 15, rng);
        const double hv = hypervolume(pts, r);
        std::reverse(pts.begin(), pts.end());
        CHECK(hypervolume(pts, r) == doctest::Approx(hv).epsilon(1e-13));
    }
    SUBCASE("invariant to duplicated points") {
        const int k = 3;
        const ObjectiveVector r(k, 1.0);
        auto pts = random_points(k, 10, rng);
        const double hv = hypervolume(pts, r);
        auto doubled = pts;
        doubled.insert(doubled.end(), pts.begin(), pts.end());
        CHECK(hypervolume(doubled, r) == hv);
    }
}

TEST_CASE("normalized hypervolume") {
    Rng rng(41);
    const auto raw = random_points(2, 15, rng);
    const ParetoFront front = non_dominated_filter(raw);
    const ObjectiveVector r{1.0, 1.0};
    CHECK(normalized_hv(front.points, front, r) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(normalized_hv(std::vector<ObjectiveVector>{}, front, r) == 0.0);
    const std::vector<ObjectiveVector> subset(front.points.begin(),
                                              front.points.begin() + front.size() / 2 + 1);
    const double v = normalized_hv(subset, front, r);
    CHECK(v > 0.0);
    CHECK(v <= 1.0 + 1e-12);

    ParetoFront degenerate;
    degenerate.points = {{1.0, 1.0}};
    CHECK_THROWS_AS(normalized_hv(subset, degenerate, r), std::domain_error);
}

TEST_CASE("brute force Pareto oracle") {
    SUBCASE("identical columns reduce to the argmin states") {
        // both objectives equal => front is exactly the set of minimizers
        LinearObjective lin;
        lin.c = {1.0, 1.0, 1.0};
        ProblemInstance inst;
        inst.cls = ProblemClass::I;
        inst.d = 2;
        inst.num_vars = 3;
        inst.num_objectives = 2;
        inst.objectives = {lin, lin};
        const CostTable table(inst);
        const ParetoFront front = brute_force_pareto(table);
        REQUIRE(front.size() == 1);
        CHECK(front.source_indices[0] == 0);
    }
    SUBCASE("perfect anti-correlation keeps every distinct value") {
        LinearObjective a, b;
        a.c = {1.0, 2.0};
        b.c = {-1.0, -2.0};
        ProblemInstance inst;
        inst.cls = ProblemClass::I;
        inst.d = 3;
        inst.num_vars = 2;
        inst.num_objectives = 2;
        inst.objectives = {a, b};
        const CostTable table(inst);
        // raw values 0..8 are all distinct, so every state is efficient
        CHECK(brute_force_pareto(table).size() == 9);
    }
    SUBCASE("matches the all-pairs quadratic check on a random instance") {
        const CostTable table(gen_instance(ProblemClass::II, 2, 8, 5));
        const ParetoFront fast = brute_force_pareto(table);

        std::vector<BasisIndex> slow;
        for (BasisIndex x = 0; x < table.dim(); ++x) {
            const ObjectiveVector px = table.objective_vector(x);
            bool efficient = true;
            for (BasisIndex y = 0; y < table.dim() && efficient; ++y) {
                if (y == x) continue;
                if (strictly_dominates(table.objective_vector(y), px)) efficient = false;
            }
            if (efficient) slow.push_back(x);
        }
        CHECK(fast.source_indices == slow);
    }
}
