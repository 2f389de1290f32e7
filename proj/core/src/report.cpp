#include "qmoo/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qmoo {

double nearest_rank_quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::domain_error("nearest_rank_quantile: empty sample");
    if (p < 0.0 || p > 1.0) throw std::domain_error("nearest_rank_quantile: p outside [0,1]");
    std::sort(values.begin(), values.end());
    if (p == 0.0) return values.front();
    const auto rank = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(values.size())));
    return values[rank - 1];
}

namespace {

bool wildcard_match(const std::string& pattern, const std::string& text) {
    // '*' only; classic two-pointer scan
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

}  // namespace

std::vector<std::filesystem::path> find_record_files(const std::string& pattern) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    const fs::path p(pattern);
    if (fs::is_directory(p)) {
        for (const auto& entry : fs::directory_iterator(p))
            if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
                files.push_back(entry.path());
    } else if (pattern.find('*') != std::string::npos) {
        const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
        const std::string name_pattern = p.filename().string();
        if (!fs::is_directory(dir)) return files;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && wildcard_match(name_pattern, entry.path().filename().string()))
                files.push_back(entry.path());
    } else if (fs::is_regular_file(p)) {
        files.push_back(p);
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string group_key(const RunConfig& c) {
    std::ostringstream key;
    key << c.algorithm << "," << to_string(c.cls) << "," << c.d << "," << c.num_vars;
    if (c.algorithm == "qmoo")
        key << "," << c.layers << "," << c.shots_label() << "," << to_string(c.method);
    else
        key << ",-,-,nsga2";
    return key.str();
}

ReportPaths write_report(std::span<const RunRecord> records,
                         const std::filesystem::path& out_prefix) {
    if (records.empty()) throw std::domain_error("write_report: no records");

    std::map<std::string, std::vector<const RunRecord*>> groups;
    for (const auto& r : records) groups[group_key(r.config)].push_back(&r);

    ReportPaths paths;
    paths.trace_quantiles = out_prefix.string() + "_trace_quantiles.csv";
    paths.finals = out_prefix.string() + "_finals.csv";
    paths.summary = out_prefix.string() + "_summary.csv";

    // per-iteration quantiles, early-stopped runs carry their last value
    {
        std::ostringstream out;
        out << "algorithm,class,d,N,layers,shots,method,iteration,n_runs,median,q20,q80\n";
        for (const auto& [key, group] : groups) {
            std::size_t max_rows = 0;
            for (const auto* r : group) max_rows = std::max(max_rows, r->rows.size());
            for (std::size_t i = 0; i < max_rows; ++i) {
                std::vector<double> vals;
                vals.reserve(group.size());
                int iteration = static_cast<int>(i);
                for (const auto* r : group) {
                    if (r->rows.empty()) continue;
                    const auto& row = r->rows[std::min(i, r->rows.size() - 1)];
                    if (i < r->rows.size()) iteration = row.iteration;
                    vals.push_back(row.normalized_hv);
                }
                if (vals.empty()) continue;
                out << key << "," << iteration << "," << vals.size() << ","
                    << format_double(nearest_rank_quantile(vals, 0.5)) << ","
                    << format_double(nearest_rank_quantile(vals, 0.2)) << ","
                    << format_double(nearest_rank_quantile(vals, 0.8)) << "\n";
            }
        }
        write_file_atomic(paths.trace_quantiles, out.str());
    }

    // one row per run
    {
        std::ostringstream out;
        out << "algorithm,class,d,N,layers,shots,method,instance_seed,run_index,iterations_run,"
               "evaluations,final_hv,final_normalized_hv\n";
        for (const auto& [key, group] : groups) {
            for (const auto* r : group) {
                const std::uint64_t evals = r->rows.empty() ? 0 : r->rows.back().evaluations;
                const int iters = r->rows.empty() ? 0 : r->rows.back().iteration;
                out << key << "," << r->config.instance_seed << "," << r->config.run_index << ","
                    << iters << "," << evals << "," << format_double(r->final_hv) << ","
                    << format_double(r->final_normalized_hv) << "\n";
            }
        }
        write_file_atomic(paths.finals, out.str());
    }

    // final-value distribution per group
    {
        std::ostringstream out;
        out << "algorithm,class,d,N,layers,shots,method,n_runs,median,q20,q80\n";
        for (const auto& [key, group] : groups) {
            std::vector<double> finals;
            finals.reserve(group.size());
            for (const auto* r : group) finals.push_back(r->final_normalized_hv);
            out << key << "," << finals.size() << ","
                << format_double(nearest_rank_quantile(finals, 0.5)) << ","
                << format_double(nearest_rank_quantile(finals, 0.2)) << ","
                << format_double(nearest_rank_quantile(finals, 0.8)) << "\n";
        }
        write_file_atomic(paths.summary, out.str());
    }
    return paths;
}

}  // namespace qmoo
