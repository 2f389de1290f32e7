// qmoo command line tool: benchmark instance generation, exact Pareto
// oracles, variational and NSGA-II optimization campaigns, and aggregation
// of run records into plot-ready tables.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "qmoo/campaign.hpp"
#include "qmoo/io.hpp"
#include "qmoo/report.hpp"

namespace {

using namespace qmoo;

// "0-10", "0,3,7" or a combination of comma-separated entries
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t dash = item.find('-');
        if (dash == std::string::npos) {
            seeds.push_back(std::stoull(item));
        } else {
            const std::uint64_t lo = std::stoull(item.substr(0, dash));
            const std::uint64_t hi = std::stoull(item.substr(dash + 1));
            if (hi < lo) throw CLI::ValidationError("--seeds", "descending range " + item);
            for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        }
        pos = comma + 1;
    }
    if (seeds.empty()) throw CLI::ValidationError("--seeds", "empty seed list");
    return seeds;
}

std::vector<ShotPolicy> parse_shot_list(const std::string& text) {
    std::vector<ShotPolicy> policies;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        if (item == "exact" || item == "inf")
            policies.push_back(ShotPolicy::exact_mode());
        else
            policies.push_back(ShotPolicy::finite(std::stoull(item)));
        pos = comma + 1;
    }
    if (policies.empty()) throw CLI::ValidationError("--shots", "empty shot list");
    return policies;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QMOO: variational quantum multi-objective optimization testbed"};
    app.require_subcommand(1);

    // ---- gen ----
    std::string cls_str = "II";
    int d = 2, n = 4;
    std::uint64_t seed = 0;
    std::string out_path = "instance.json";

    auto* gen = app.add_subcommand("gen", "Generate a benchmark problem instance file");
    gen->add_option("--class", cls_str, "Problem class I..V")->required();
    gen->add_option("--d", d, "Local qudit dimension")->required();
    gen->add_option("--n", n, "Number of variables / qudits")->required();
    gen->add_option("--seed", seed, "Instance seed")->capture_default_str();
    gen->add_option("--out", out_path, "Output file")->capture_default_str();

    // ---- oracle ----
    std::string oracle_instance;
    bool with_scatter = false;
    auto* oracle = app.add_subcommand(
        "oracle", "Compute the exact Pareto front and its hypervolume for an instance");
    oracle->add_option("--instance", oracle_instance, "Instance file (alternative to --class)");
    oracle->add_option("--class", cls_str, "Problem class I..V");
    oracle->add_option("--d", d, "Local qudit dimension");
    oracle->add_option("--n", n, "Number of variables / qudits");
    oracle->add_option("--seed", seed, "Instance seed")->capture_default_str();
    oracle->add_flag("--scatter", with_scatter, "Also store every state's objective vector");
    oracle->add_option("--out", out_path, "Output file")->capture_default_str();

    // ---- run / baseline ----
    std::string seeds_str = "0-10";
    std::string shots_str = "128";
    std::string optimizer_str = "powell";
    int runs = 50;
    int layers = 1;
    int n_select = 20;
    int iterations = 200;
    int population = 10;
    std::uint64_t campaign_seed = 0;
    double line_xtol = 1e-2;
    int threads = 0;
    std::string out_dir = "runs";

    auto* run = app.add_subcommand("run", "Run a variational optimization campaign");
    run->add_option("--class", cls_str, "Problem class I..V")->required();
    run->add_option("--d", d, "Local qudit dimension")->required();
    run->add_option("--n", n, "Number of variables / qudits")->required();
    run->add_option("--seeds", seeds_str, "Instance seeds, e.g. 0-10 or 0,2,5")
        ->capture_default_str();
    run->add_option("--runs", runs, "Runs per instance")->capture_default_str();
    run->add_option("--layers", layers, "Circuit layers L")->capture_default_str();
    run->add_option("--shots", shots_str, "Shot settings, e.g. 128,1024,exact")
        ->capture_default_str();
    run->add_option("--optimizer", optimizer_str, "powell or cmaes")->capture_default_str();
    run->add_option("--select", n_select, "Solutions kept per evaluation (N_S)")
        ->capture_default_str();
    run->add_option("--iterations", iterations, "Optimizer iteration cap")->capture_default_str();
    run->add_option("--population", population, "CMA-ES population")->capture_default_str();
    run->add_option("--campaign-seed", campaign_seed, "Campaign master seed")
        ->capture_default_str();
    run->add_option("--line-xtol", line_xtol, "Powell line-search tolerance (radians)")
        ->capture_default_str();
    int stall_patience = 5;
    run->add_option("--stall-patience", stall_patience,
                    "Consecutive stalled iterations before stopping")
        ->capture_default_str();
    run->add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    run->add_option("--out", out_dir, "Output directory for run records")->capture_default_str();

    int baseline_runs = 40;
    int baseline_population = 20;
    auto* baseline = app.add_subcommand("baseline", "Run the NSGA-II baseline campaign");
    baseline->add_option("--class", cls_str, "Problem class I..V")->required();
    baseline->add_option("--d", d, "Local qudit dimension")->required();
    baseline->add_option("--n", n, "Number of variables / qudits")->required();
    baseline->add_option("--seeds", seeds_str, "Instance seeds")->capture_default_str();
    baseline->add_option("--runs", baseline_runs, "Runs per instance")->capture_default_str();
    baseline->add_option("--iterations", iterations, "Generations")->capture_default_str();
    baseline->add_option("--population", baseline_population, "Population size")
        ->capture_default_str();
    baseline->add_option("--campaign-seed", campaign_seed, "Campaign master seed")
        ->capture_default_str();
    baseline->add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    baseline->add_option("--out", out_dir, "Output directory for run records")
        ->capture_default_str();

    // ---- report ----
    std::string records_pattern = "runs";
    std::string report_prefix = "report";
    auto* report = app.add_subcommand("report", "Aggregate run records into CSV tables");
    report->add_option("--records", records_pattern,
                       "Directory of record files, or a glob like runs/qmoo_*.jsonl")
        ->capture_default_str();
    report->add_option("--out", report_prefix, "Output file prefix")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const ProblemInstance inst =
                gen_instance(problem_class_from_string(cls_str), d, n, seed);
            save_instance(inst, out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }

        if (oracle->parsed()) {
            ProblemInstance inst;
            if (!oracle_instance.empty()) {
                inst = load_instance(oracle_instance);
            } else {
                if (!oracle->count("--class") || !oracle->count("--d") || !oracle->count("--n"))
                    throw std::runtime_error("oracle: give --instance or --class/--d/--n/--seed");
                inst = gen_instance(problem_class_from_string(cls_str), d, n, seed);
            }
            const CostTable table(inst);
            const OracleData data = compute_oracle(table, with_scatter);
            save_oracle(data, out_path);
            std::cout << "wrote " << out_path << " (front size " << data.front.size()
                      << ", front HV " << data.front_hv << ")\n";
            return 0;
        }

        if (run->parsed() || baseline->parsed()) {
            CampaignConfig cfg;
            cfg.cls = problem_class_from_string(cls_str);
            cfg.d = d;
            cfg.num_vars = n;
            cfg.instance_seeds = parse_seed_list(seeds_str);
            cfg.layers = layers;
            cfg.n_select = n_select;
            cfg.campaign_seed = campaign_seed;
            cfg.threads = threads;
            cfg.out_dir = out_dir;

            std::vector<std::filesystem::path> written;
            if (run->parsed()) {
                cfg.runs_per_instance = runs;
                cfg.policies = parse_shot_list(shots_str);
                cfg.opt.method = opt_method_from_string(optimizer_str);
                cfg.opt.iteration_cap = iterations;
                cfg.opt.population = population;
                cfg.opt.line_xtol = line_xtol;
                cfg.opt.stall_patience = stall_patience;
                written = run_campaign(cfg);
            } else {
                cfg.runs_per_instance = baseline_runs;
                cfg.moea.population = baseline_population;
                cfg.moea.iterations = iterations;
                written = run_baseline_campaign(cfg);
            }
            std::cout << "wrote " << written.size() << " run records to " << out_dir << "\n";
            return 0;
        }

        if (report->parsed()) {
            const auto files = find_record_files(records_pattern);
            if (files.empty()) throw std::runtime_error("no record files match " + records_pattern);
            std::vector<RunRecord> records;
            records.reserve(files.size());
            for (const auto& f : files) records.push_back(load_run_record(f));
            const ReportPaths paths = write_report(records, report_prefix);
            std::cout << "wrote " << paths.trace_quantiles << "\n"
                      << "wrote " << paths.finals << "\n"
                      << "wrote " << paths.summary << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
