#include "qmoo/campaign.hpp"

#include <atomic>
#include <chrono>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qmoo/circuit.hpp"
#include "qmoo/rng.hpp"

namespace qmoo {

namespace {

std::uint64_t run_stream_seed(const CampaignConfig& cfg, std::uint64_t instance_seed,
                              int run_index, int policy_index) {
    return derive_seed(cfg.campaign_seed, instance_seed,
                       (static_cast<std::uint64_t>(run_index) << 8) |
                           static_cast<std::uint64_t>(policy_index & 0xff));
}

}  // namespace

std::filesystem::path record_filename(const RunConfig& c) {
    std::ostringstream name;
    name << c.algorithm << "_" << to_string(c.cls) << "_d" << c.d << "_N" << c.num_vars;
    if (c.algorithm == "qmoo")
        name << "_L" << c.layers << "_" << to_string(c.method) << "_s" << c.shots_label();
    name << "_i" << c.instance_seed << "_r" << c.run_index << ".jsonl";
    return name.str();
}

RunRecord run_single_qmoo(const CostTable& table, const OracleData& oracle,
                          const CampaignConfig& cfg, std::uint64_t instance_seed, int run_index,
                          ShotPolicy policy, int policy_index) {
    const auto t0 = std::chrono::steady_clock::now();
    const int k = table.num_objectives();
    const int d = table.d();

    RunRecord record;
    record.config.algorithm = "qmoo";
    record.config.cls = table.instance().cls;
    record.config.d = d;
    record.config.num_vars = table.num_vars();
    record.config.num_objectives = k;
    record.config.instance_seed = instance_seed;
    record.config.run_index = run_index;
    record.config.campaign_seed = cfg.campaign_seed;
    record.config.method = cfg.opt.method;
    record.config.policy = policy;
    record.config.layers = cfg.layers;
    record.config.n_select = cfg.n_select;
    record.config.iterations = cfg.opt.iteration_cap;
    record.config.population = cfg.opt.population;
    record.config.line_xtol = cfg.opt.line_xtol;
    record.config.line_max_evals = cfg.opt.line_max_evals;
    record.config.stall_patience = cfg.opt.stall_patience;
    record.front_hv = oracle.front_hv;

    Rng rng(run_stream_seed(cfg, instance_seed, run_index, policy_index));
    const CircuitParams shape = CircuitParams::zeros(cfg.layers, k, d);
    std::vector<double> x0 = random_init(shape.packed_size(), rng);

    const CostFn objective = [&](std::span<const double> x) {
        const CircuitParams params = unpack_params(x, cfg.layers, k, d);
        const EvaluationResult ev = evaluate_params(table, params, policy, cfg.n_select, rng);
        return -ev.hv;
    };

    OptimizerConfig opt = cfg.opt;
    opt.seed = derive_seed(run_stream_seed(cfg, instance_seed, run_index, policy_index), 1);
    const OptimizeResult res = (opt.method == OptMethod::powell)
                                   ? powell_minimize(objective, x0, opt)
                                   : cmaes_minimize(objective, x0, opt);

    record.rows.reserve(res.trace.points.size());
    for (const auto& tp : res.trace.points) {
        RunRow row;
        row.iteration = tp.iteration;
        row.hv = -tp.best_value;
        row.normalized_hv = row.hv / oracle.front_hv;
        row.hv_draw = -tp.value;
        row.evaluations = tp.evaluations;
        const CircuitParams params = unpack_params(tp.x, cfg.layers, k, d);
        const StateVector state = prepare_state(table, params);
        row.pareto_weight = pareto_weight(state, oracle.front.source_indices);
        record.rows.push_back(std::move(row));
    }

    // final solution set: one fresh evaluation at the incumbent, on its own
    // derived stream so the reported set does not depend on how many draws
    // the optimizer consumed
    Rng final_rng(derive_seed(run_stream_seed(cfg, instance_seed, run_index, policy_index), 2));
    const CircuitParams best = unpack_params(res.x_best, cfg.layers, k, d);
    const EvaluationResult fin =
        evaluate_params(table, best, policy, cfg.n_select, final_rng, oracle.front.source_indices);
    record.final_solutions = fin.solutions;
    record.final_hv = fin.hv;
    record.final_normalized_hv = fin.hv / oracle.front_hv;

    record.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return record;
}

RunRecord run_single_baseline(const CostTable& table, const OracleData& oracle,
                              const CampaignConfig& cfg, std::uint64_t instance_seed,
                              int run_index) {
    const auto t0 = std::chrono::steady_clock::now();

    RunRecord record;
    record.config.algorithm = "nsga2";
    record.config.cls = table.instance().cls;
    record.config.d = table.d();
    record.config.num_vars = table.num_vars();
    record.config.num_objectives = table.num_objectives();
    record.config.instance_seed = instance_seed;
    record.config.run_index = run_index;
    record.config.campaign_seed = cfg.campaign_seed;
    record.config.iterations = cfg.moea.iterations;
    record.config.population = cfg.moea.population;
    record.front_hv = oracle.front_hv;

    MoeaConfig moea = cfg.moea;
    moea.seed = run_stream_seed(cfg, instance_seed, run_index, 0);
    const NsgaResult res = run_nsga2(table, moea);

    record.rows.reserve(res.trace.points.size());
    for (const auto& tp : res.trace.points) {
        RunRow row;
        row.iteration = tp.iteration;
        row.hv = tp.best_value;  // archive best
        row.normalized_hv = tp.best_value / oracle.front_hv;
        row.hv_draw = tp.value;  // current population front
        row.evaluations = tp.evaluations;
        record.rows.push_back(row);
    }

    const ObjectiveVector ref(table.num_objectives(), 1.0);
    record.final_hv = hypervolume(res.front.points, ref);
    record.final_normalized_hv = record.final_hv / oracle.front_hv;
    for (std::size_t i = 0; i < res.front.points.size(); ++i)
        record.final_solutions.emplace_back(res.front.source_indices[i], res.front.points[i]);

    record.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return record;
}

namespace {

struct InstanceContext {
    std::uint64_t seed;
    CostTable table;
    OracleData oracle;
};

std::vector<InstanceContext> prepare_instances(const CampaignConfig& cfg) {
    std::set<std::uint64_t> distinct(cfg.instance_seeds.begin(), cfg.instance_seeds.end());
    if (distinct.size() != cfg.instance_seeds.size())
        throw std::domain_error("campaign: instance seeds must be distinct");
    std::vector<InstanceContext> instances;
    instances.reserve(cfg.instance_seeds.size());
    for (std::uint64_t seed : cfg.instance_seeds) {
        const ProblemInstance inst = gen_instance(cfg.cls, cfg.d, cfg.num_vars, seed);
        CostTable table(inst);
        OracleData oracle = compute_oracle(table);
        instances.push_back({seed, std::move(table), std::move(oracle)});
    }
    return instances;
}

template <typename Task>
void parallel_for_tasks(int threads, std::size_t n_tasks, const Task& task) {
    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    if (n_tasks < static_cast<std::size_t>(n_threads)) n_threads = static_cast<int>(n_tasks);

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_tasks) break;
            task(i);
        }
    };
    if (n_threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<std::filesystem::path> run_campaign(const CampaignConfig& cfg) {
    const auto instances = prepare_instances(cfg);
    const std::size_t runs = static_cast<std::size_t>(cfg.runs_per_instance);
    const std::size_t n_tasks = instances.size() * runs * cfg.policies.size();

    std::vector<std::filesystem::path> paths(n_tasks);
    std::mutex log_mutex;
    parallel_for_tasks(cfg.threads, n_tasks, [&](std::size_t i) {
        const std::size_t per_instance = runs * cfg.policies.size();
        const std::size_t inst_idx = i / per_instance;
        const std::size_t rest = i % per_instance;
        const int run_index = static_cast<int>(rest / cfg.policies.size());
        const int policy_index = static_cast<int>(rest % cfg.policies.size());
        const auto& ctx = instances[inst_idx];
        try {
            const RunRecord record = run_single_qmoo(ctx.table, ctx.oracle, cfg, ctx.seed,
                                                     run_index, cfg.policies[policy_index],
                                                     policy_index);
            const auto path = cfg.out_dir / record_filename(record.config);
            save_run_record(record, path);
            paths[i] = path;
        } catch (const std::exception& e) {
            const std::scoped_lock lock(log_mutex);
            std::cerr << "run failed (instance " << ctx.seed << ", run " << run_index
                      << "): " << e.what() << "\n";
        }
    });

    std::vector<std::filesystem::path> written;
    for (auto& p : paths)
        if (!p.empty()) written.push_back(std::move(p));
    return written;
}

std::vector<std::filesystem::path> run_baseline_campaign(const CampaignConfig& cfg) {
    const auto instances = prepare_instances(cfg);
    const std::size_t runs = static_cast<std::size_t>(cfg.runs_per_instance);
    const std::size_t n_tasks = instances.size() * runs;

    std::vector<std::filesystem::path> paths(n_tasks);
    std::mutex log_mutex;
    parallel_for_tasks(cfg.threads, n_tasks, [&](std::size_t i) {
        const std::size_t inst_idx = i / runs;
        const int run_index = static_cast<int>(i % runs);
        const auto& ctx = instances[inst_idx];
        try {
            const RunRecord record =
                run_single_baseline(ctx.table, ctx.oracle, cfg, ctx.seed, run_index);
            const auto path = cfg.out_dir / record_filename(record.config);
            save_run_record(record, path);
            paths[i] = path;
        } catch (const std::exception& e) {
            const std::scoped_lock lock(log_mutex);
            std::cerr << "baseline run failed (instance " << ctx.seed << ", run " << run_index
                      << "): " << e.what() << "\n";
        }
    });

    std::vector<std::filesystem::path> written;
    for (auto& p : paths)
        if (!p.empty()) written.push_back(std::move(p));
    return written;
}

}  // namespace qmoo
