#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qmoo/rng.hpp"

namespace qmoo {

/// Objective callback; optimizers minimize it.
using CostFn = std::function<double(std::span<const double>)>;

enum class OptMethod { powell, cmaes };

std::string to_string(OptMethod m);
OptMethod opt_method_from_string(const std::string& s);

struct OptimizerConfig {
    OptMethod method = OptMethod::powell;
    std::size_t max_evaluations = std::numeric_limits<std::size_t>::max();
    int iteration_cap = 200;
    int population = 10;  // CMA-ES only
    double init_low = -3.14159265358979323846;
    double init_high = 3.14159265358979323846;
    std::uint64_t seed = 0;
    /// Stop when one iteration improves f by less than this, relatively.
    double ftol_rel = 1e-8;
    /// Number of consecutive below-tolerance iterations required to stop.
    /// 1 stops on the first stalled sweep; noisy objectives need a few so
    /// that a single unlucky sweep does not end the run.
    int stall_patience = 1;
    /// Powell line search: absolute tolerance on the step along a direction
    /// and a per-line evaluation cap.
    double line_xtol = 1e-2;
    int line_max_evals = 40;
};

/// One record per optimizer iteration (a full direction sweep for Powell,
/// a generation for CMA-ES). Iteration 0 is the initial point.
struct TracePoint {
    int iteration = 0;
    double value = 0.0;       // objective seen at this iteration
    double best_value = 0.0;  // running minimum
    std::vector<double> x;    // incumbent parameters at this iteration
    std::size_t evaluations = 0;
};

struct Trace {
    std::vector<TracePoint> points;
};

struct OptimizeResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    Trace trace;
    std::size_t evaluations = 0;
};

/// i.i.d. uniform draws in [lo, hi], the paper's random initialization.
std::vector<double> random_init(int n_params, Rng& rng, double lo = -3.14159265358979323846,
                                double hi = 3.14159265358979323846);

/// Powell's conjugate-direction method. Per iteration: one bounded Brent
/// line minimization (bracket [-pi, pi] along the direction) for each
/// direction, then the direction of largest single-line decrease is replaced
/// by the sweep's net displacement. Stops at the iteration cap, the
/// evaluation budget, or relative improvement below cfg.ftol_rel.
OptimizeResult powell_minimize(const CostFn& f, std::vector<double> x0,
                               const OptimizerConfig& cfg);

/// Standard (mu/mu_w, lambda) CMA-ES with log-rank weights, cumulative
/// step-size control and rank-one + rank-mu covariance update. Initial step
/// is 0.3 * (init_high - init_low). A degenerate covariance is reset to the
/// identity and the run continues.
OptimizeResult cmaes_minimize(const CostFn& f, std::vector<double> x0,
                              const OptimizerConfig& cfg);

}  // namespace qmoo
