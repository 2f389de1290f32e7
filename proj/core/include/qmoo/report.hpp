#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qmoo/io.hpp"

namespace qmoo {

/// Nearest-rank quantile: value at rank ceil(p * n) of the sorted sample.
double nearest_rank_quantile(std::vector<double> values, double p);

/// Record files matched by `pattern`: a directory (all .jsonl inside) or a
/// path whose filename component may contain '*' wildcards. Sorted by path.
std::vector<std::filesystem::path> find_record_files(const std::string& pattern);

/// Grouping key for aggregation: one group per experimental condition.
std::string group_key(const RunConfig& config);

struct ReportPaths {
    std::filesystem::path trace_quantiles;
    std::filesystem::path finals;
    std::filesystem::path summary;
};

/// Writes three CSV tables next to `out_prefix`:
///   <prefix>_trace_quantiles.csv  per-iteration median/q20/q80 of the
///                                 normalized hypervolume, per group (runs
///                                 that stopped early carry their last value
///                                 forward);
///   <prefix>_finals.csv           one row per run with its final solution
///                                 set's normalized hypervolume;
///   <prefix>_summary.csv          median/q20/q80 of the final values per
///                                 group.
ReportPaths write_report(std::span<const RunRecord> records,
                         const std::filesystem::path& out_prefix);

}  // namespace qmoo
