#pragma once

#include <filesystem>
#include <vector>

#include "qmoo/io.hpp"
#include "qmoo/nsga2.hpp"
#include "qmoo/optimizers.hpp"

namespace qmoo {

/// One experiment campaign: a grid of (instance seed x run index x shot
/// policy) runs on a single problem setup. Every run's RNG stream is derived
/// from (campaign_seed, instance_seed, run_index, policy position), so the
/// output bytes depend only on this config.
struct CampaignConfig {
    ProblemClass cls = ProblemClass::II;
    int d = 2;
    int num_vars = 4;
    std::vector<std::uint64_t> instance_seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    int runs_per_instance = 50;
    int layers = 1;
    std::vector<ShotPolicy> policies = {ShotPolicy::finite(128)};
    OptimizerConfig opt;
    MoeaConfig moea;
    int n_select = 20;
    std::uint64_t campaign_seed = 0;
    std::filesystem::path out_dir = "runs";
    int threads = 0;  // 0 = hardware concurrency
};

/// Runs the variational campaign; returns the written record paths.
std::vector<std::filesystem::path> run_campaign(const CampaignConfig& cfg);

/// Runs the NSGA-II baseline campaign (one run set per instance seed;
/// policies are not used).
std::vector<std::filesystem::path> run_baseline_campaign(const CampaignConfig& cfg);

/// Executes a single variational run (used by the campaign workers and the
/// determinism tests).
RunRecord run_single_qmoo(const CostTable& table, const OracleData& oracle,
                          const CampaignConfig& cfg, std::uint64_t instance_seed, int run_index,
                          ShotPolicy policy, int policy_index);

RunRecord run_single_baseline(const CostTable& table, const OracleData& oracle,
                              const CampaignConfig& cfg, std::uint64_t instance_seed,
                              int run_index);

std::filesystem::path record_filename(const RunConfig& config);

}  // namespace qmoo
