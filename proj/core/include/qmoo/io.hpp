#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmoo/circuit.hpp"
#include "qmoo/moo.hpp"
#include "qmoo/optimizers.hpp"
#include "qmoo/problems.hpp"

namespace qmoo {

/// Instance files carry the class, sizes, seed, every coefficient and the
/// normalization constants. Serialization is deterministic: regenerating and
/// re-saving an instance is byte-identical.
void save_instance(const ProblemInstance& inst, const std::filesystem::path& path);
ProblemInstance load_instance(const std::filesystem::path& path);

struct OracleData {
    ProblemClass cls = ProblemClass::I;
    int d = 2;
    int num_vars = 2;
    std::uint64_t seed = 0;
    int num_objectives = 2;
    double front_hv = 0.0;
    ParetoFront front;
    /// Full objective-space scatter (one vector per basis state); empty
    /// unless requested.
    std::vector<ObjectiveVector> scatter;
};

OracleData compute_oracle(const CostTable& table, bool with_scatter = false);
void save_oracle(const OracleData& oracle, const std::filesystem::path& path);
OracleData load_oracle(const std::filesystem::path& path);

/// Everything that determines a run's output bytes.
struct RunConfig {
    std::string algorithm = "qmoo";  // "qmoo" | "nsga2"
    ProblemClass cls = ProblemClass::I;
    int d = 2;
    int num_vars = 2;
    int num_objectives = 2;
    std::uint64_t instance_seed = 0;
    int run_index = 0;
    std::uint64_t campaign_seed = 0;
    // qmoo settings
    OptMethod method = OptMethod::powell;
    ShotPolicy policy = ShotPolicy::finite(128);
    int layers = 1;
    int n_select = 20;
    int iterations = 200;
    int population = 10;
    double line_xtol = 1e-2;
    int line_max_evals = 40;
    int stall_patience = 1;

    std::string shots_label() const { return policy.exact ? "exact" : std::to_string(policy.n_shots); }
};

struct RunRow {
    int iteration = 0;
    double hv = 0.0;             // best hypervolume achieved up to this iteration
    double normalized_hv = 0.0;  // hv / front_hv
    double hv_draw = 0.0;        // the hypervolume this iteration itself scored
    std::optional<double> pareto_weight;  // absent for the classical baseline
    std::uint64_t evaluations = 0;
};

struct RunRecord {
    RunConfig config;
    double front_hv = 0.0;
    std::vector<RunRow> rows;
    std::vector<std::pair<BasisIndex, ObjectiveVector>> final_solutions;
    double final_hv = 0.0;
    double final_normalized_hv = 0.0;
    /// Diagnostic only; not serialized so that record files are reproducible.
    std::uint64_t wall_time_ms = 0;
};

/// Line-delimited records: a config line, one line per iteration, a final
/// line with the solution set. Written atomically (temp file + rename).
void save_run_record(const RunRecord& record, const std::filesystem::path& path);
RunRecord load_run_record(const std::filesystem::path& path);

/// Atomic text-file write used by all writers.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace qmoo
