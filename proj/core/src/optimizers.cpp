#include "qmoo/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace qmoo {

std::string to_string(OptMethod m) {
    switch (m) {
        case OptMethod::powell: return "powell";
        case OptMethod::cmaes: return "cmaes";
    }
    throw std::domain_error("unknown optimizer method");
}

OptMethod opt_method_from_string(const std::string& s) {
    if (s == "powell") return OptMethod::powell;
    if (s == "cmaes") return OptMethod::cmaes;
    throw std::domain_error("unknown optimizer method: " + s);
}

std::vector<double> random_init(int n_params, Rng& rng, double lo, double hi) {
    if (n_params < 1) throw std::domain_error("random_init: n_params must be >= 1");
    std::vector<double> x(n_params);
    for (auto& v : x) v = rng.uniform(lo, hi);
    return x;
}

namespace {

// Budgeted objective wrapper that tracks the global best evaluated point.
struct Evaluator {
    const CostFn& f;
    std::size_t max_evaluations = 0;
    std::size_t count = 0;
    double f_best = std::numeric_limits<double>::infinity();
    std::vector<double> x_best = {};

    bool exhausted() const { return count >= max_evaluations; }

    double operator()(std::span<const double> x) {
        ++count;
        const double v = f(x);
        if (v < f_best) {
            f_best = v;
            x_best.assign(x.begin(), x.end());
        }
        return v;
    }
};

struct LineResult {
    double t = 0.0;
    double value = std::numeric_limits<double>::infinity();
};

// Bounded Brent minimization of g on [a, b]: golden-section steps with
// parabolic interpolation where the fit is trustworthy. Returns the best
// evaluated point.
LineResult brent_line(const std::function<double(double)>& g, double a, double b, double xtol,
                      int max_evals) {
    constexpr double kGolden = 0.3819660112501051;
    const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());

    double x = a + kGolden * (b - a);
    double w = x, v = x;
    double fx = g(x);
    int evals = 1;
    double fw = fx, fv = fx;
    double delta = 0.0;   // last step
    double delta2 = 0.0;  // step before last

    while (evals < max_evals) {
        const double m = 0.5 * (a + b);
        const double tol1 = sqrt_eps * std::abs(x) + xtol / 3.0;
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;

        double step = 0.0;
        bool golden = true;
        if (std::abs(delta2) > tol1) {
            // parabolic fit through x, w, v
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double prev = delta2;
            delta2 = delta;
            if (std::abs(p) < std::abs(0.5 * q * prev) && p > q * (a - x) && p < q * (b - x)) {
                step = p / q;
                const double u = x + step;
                if (u - a < tol2 || b - u < tol2) step = (x < m) ? tol1 : -tol1;
                golden = false;
            }
        }
        if (golden) {
            delta2 = (x < m) ? b - x : a - x;
            step = kGolden * delta2;
        }
        delta = (std::abs(step) >= tol1) ? step : (step > 0 ? tol1 : -tol1);
        const double u = x + delta;
        const double fu = g(u);
        ++evals;

        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return {x, fx};
}

void record(Trace& trace, int iteration, double value, double best, std::span<const double> x,
            std::size_t evals) {
    TracePoint p;
    p.iteration = iteration;
    p.value = value;
    p.best_value = best;
    p.x.assign(x.begin(), x.end());
    p.evaluations = evals;
    trace.points.push_back(p);
}

}  // namespace

OptimizeResult powell_minimize(const CostFn& f, std::vector<double> x0,
                               const OptimizerConfig& cfg) {
    const int n = static_cast<int>(x0.size());
    if (n < 1) throw std::domain_error("powell_minimize: empty parameter vector");
    constexpr double kPi = std::numbers::pi;

    Evaluator eval{f, cfg.max_evaluations};
    std::vector<double> x = std::move(x0);
    double fx = eval(x);

    OptimizeResult result;
    record(result.trace, 0, fx, fx, x, eval.count);

    std::vector<std::vector<double>> dirs(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) dirs[i][i] = 1.0;

    std::vector<double> probe(n);
    int stalled = 0;
    for (int iter = 1; iter <= cfg.iteration_cap && !eval.exhausted(); ++iter) {
        const std::vector<double> x_start = x;
        const double best_start = eval.f_best;
        double biggest_drop = 0.0;
        int biggest_dir = -1;

        for (int i = 0; i < n && !eval.exhausted(); ++i) {
            const std::vector<double>& u = dirs[i];
            // fresh value at the current point: for a stochastic objective
            // this re-baselines the incumbent instead of letting one lucky
            // draw freeze the search
            fx = eval(x);
            const auto line = [&](double t) {
                for (int j = 0; j < n; ++j) probe[j] = x[j] + t * u[j];
                return eval(probe);
            };
            const int budget = static_cast<int>(
                std::min<std::size_t>(cfg.line_max_evals, cfg.max_evaluations - eval.count));
            if (budget < 1) break;
            const LineResult lr = brent_line(line, -kPi, kPi, cfg.line_xtol, budget);
            if (lr.value < fx) {
                const double drop = fx - lr.value;
                for (int j = 0; j < n; ++j) x[j] += lr.t * u[j];
                fx = lr.value;
                if (drop > biggest_drop) {
                    biggest_drop = drop;
                    biggest_dir = i;
                }
            }
        }

        record(result.trace, iter, fx, eval.f_best, x, eval.count);

        // replace the direction of largest decrease with the net displacement
        if (biggest_dir >= 0) {
            std::vector<double> net(n);
            double norm2 = 0.0;
            for (int j = 0; j < n; ++j) {
                net[j] = x[j] - x_start[j];
                norm2 += net[j] * net[j];
            }
            if (norm2 > 1e-24) dirs[biggest_dir] = std::move(net);
        }

        // stall when the best value seen so far stopped improving; for a
        // stochastic objective the per-sweep value just fluctuates
        if (2.0 * (best_start - eval.f_best) <=
            cfg.ftol_rel * (std::abs(best_start) + std::abs(eval.f_best)) + 1e-300) {
            if (++stalled >= cfg.stall_patience) break;
        } else {
            stalled = 0;
        }
    }

    result.x_best = eval.x_best;
    result.f_best = eval.f_best;
    result.evaluations = eval.count;
    return result;
}

OptimizeResult cmaes_minimize(const CostFn& f, std::vector<double> x0,
                              const OptimizerConfig& cfg) {
    const int n = static_cast<int>(x0.size());
    if (n < 1) throw std::domain_error("cmaes_minimize: empty parameter vector");
    const int lambda = cfg.population;
    if (lambda < 4) throw std::domain_error("cmaes_minimize: population must be >= 4");

    Rng rng(cfg.seed);
    Evaluator eval{f, cfg.max_evaluations};

    const int mu = lambda / 2;
    Eigen::VectorXd weights(mu);
    for (int i = 0; i < mu; ++i) weights(i) = std::log(mu + 0.5) - std::log(i + 1.0);
    weights /= weights.sum();
    const double mu_eff = 1.0 / weights.squaredNorm();

    const double c_sigma = (mu_eff + 2.0) / (n + mu_eff + 5.0);
    const double d_sigma =
        1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (n + 1.0)) - 1.0) + c_sigma;
    const double c_c = (4.0 + mu_eff / n) / (n + 4.0 + 2.0 * mu_eff / n);
    const double c_1 = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff);
    const double c_mu = std::min(1.0 - c_1, 2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) /
                                                ((n + 2.0) * (n + 2.0) + mu_eff));
    const double chi_n = std::sqrt(static_cast<double>(n)) *
                         (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));

    Eigen::VectorXd mean = Eigen::Map<const Eigen::VectorXd>(x0.data(), n);
    double sigma = 0.3 * (cfg.init_high - cfg.init_low);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd path_sigma = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd path_c = Eigen::VectorXd::Zero(n);

    OptimizeResult result;
    {
        const double f0 = eval(std::span<const double>(x0.data(), x0.size()));
        record(result.trace, 0, f0, eval.f_best, x0, eval.count);
    }

    Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);

    std::vector<Eigen::VectorXd> zs(lambda), ys(lambda), xs(lambda);
    std::vector<double> fs(lambda);
    std::vector<int> order(lambda);
    std::vector<double> x_buf(n);

    for (int gen = 1; gen <= cfg.iteration_cap; ++gen) {
        if (eval.count + static_cast<std::size_t>(lambda) > cfg.max_evaluations) break;

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
        bool degenerate = es.info() != Eigen::Success;
        if (!degenerate) {
            for (int i = 0; i < n; ++i)
                if (!(es.eigenvalues()(i) > 0.0) || !std::isfinite(es.eigenvalues()(i)))
                    degenerate = true;
        }
        if (degenerate) {
            cov = Eigen::MatrixXd::Identity(n, n);
            basis = Eigen::MatrixXd::Identity(n, n);
            scale = Eigen::VectorXd::Ones(n);
            path_sigma.setZero();
            path_c.setZero();
        } else {
            basis = es.eigenvectors();
            scale = es.eigenvalues().cwiseSqrt();
        }

        for (int i = 0; i < lambda; ++i) {
            Eigen::VectorXd z(n);
            for (int j = 0; j < n; ++j) z(j) = rng.normal();
            zs[i] = z;
            ys[i] = basis * scale.asDiagonal() * z;
            xs[i] = mean + sigma * ys[i];
            Eigen::Map<Eigen::VectorXd>(x_buf.data(), n) = xs[i];
            fs[i] = eval(std::span<const double>(x_buf.data(), x_buf.size()));
        }

        for (int i = 0; i < lambda; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&fs](int a, int b) {
            if (fs[a] != fs[b]) return fs[a] < fs[b];
            return a < b;
        });

        Eigen::VectorXd y_w = Eigen::VectorXd::Zero(n);
        Eigen::VectorXd z_w = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < mu; ++i) {
            y_w += weights(i) * ys[order[i]];
            z_w += weights(i) * zs[order[i]];
        }

        mean += sigma * y_w;
        path_sigma = (1.0 - c_sigma) * path_sigma +
                     std::sqrt(c_sigma * (2.0 - c_sigma) * mu_eff) * (basis * z_w);
        const double ps_norm = path_sigma.norm();
        const double decay = 1.0 - std::pow(1.0 - c_sigma, 2.0 * gen);
        const bool h_sigma = ps_norm / std::sqrt(decay) < (1.4 + 2.0 / (n + 1.0)) * chi_n;
        path_c = (1.0 - c_c) * path_c +
                 (h_sigma ? std::sqrt(c_c * (2.0 - c_c) * mu_eff) : 0.0) * y_w;

        Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < mu; ++i) rank_mu += weights(i) * (ys[order[i]] * ys[order[i]].transpose());
        const double c1a = c_1 * (h_sigma ? 0.0 : c_c * (2.0 - c_c));
        cov = (1.0 - c_1 - c_mu + c1a) * cov + c_1 * (path_c * path_c.transpose()) +
              c_mu * rank_mu;
        sigma *= std::exp((c_sigma / d_sigma) * (ps_norm / chi_n - 1.0));
        if (!std::isfinite(sigma) || sigma <= 0.0) sigma = 0.3 * (cfg.init_high - cfg.init_low);

        const int gen_best = order[0];
        Eigen::Map<Eigen::VectorXd>(x_buf.data(), n) = xs[gen_best];
        record(result.trace, gen, fs[gen_best], eval.f_best, x_buf, eval.count);
    }

    result.x_best = eval.x_best;
    result.f_best = eval.f_best;
    result.evaluations = eval.count;
    return result;
}

}  // namespace qmoo
