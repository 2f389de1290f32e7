#include "qmoo/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qmoo {

using json = nlohmann::ordered_json;

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << contents;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r > 0 ? static_cast<Eigen::Index>(rows[0].size()) : 0;
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i][j].get<double>();
    return m;
}

json objective_to_json(const ObjectiveFunction& obj) {
    json j;
    if (const auto* lin = std::get_if<LinearObjective>(&obj)) {
        j["type"] = "linear";
        j["c"] = lin->c;
    } else {
        const auto& q = std::get<QuadraticObjective>(obj);
        j["type"] = "quadratic";
        j["J"] = matrix_to_json(q.J);
        j["h"] = std::vector<double>(q.h.data(), q.h.data() + q.h.size());
    }
    return j;
}

ObjectiveFunction objective_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "linear") {
        LinearObjective lin;
        lin.c = j.at("c").get<std::vector<double>>();
        return lin;
    }
    if (type != "quadratic") throw std::runtime_error("unknown objective type: " + type);
    QuadraticObjective q;
    q.J = matrix_from_json(j.at("J"));
    const auto h = j.at("h").get<std::vector<double>>();
    q.h = Eigen::Map<const Eigen::VectorXd>(h.data(), static_cast<Eigen::Index>(h.size()));
    return q;
}

}  // namespace

void save_instance(const ProblemInstance& inst, const std::filesystem::path& path) {
    json j;
    j["format"] = "qmoo-instance";
    j["version"] = 1;
    j["class"] = to_string(inst.cls);
    j["d"] = inst.d;
    j["N"] = inst.num_vars;
    j["K"] = inst.num_objectives;
    j["seed"] = inst.seed;
    j["coupling_ranges"] = {{"afm", {inst.afm_lo, inst.afm_hi}}, {"fm", {inst.fm_lo, inst.fm_hi}}};
    json objs = json::array();
    for (const auto& o : inst.objectives) objs.push_back(objective_to_json(o));
    j["objectives"] = std::move(objs);

    // normalization constants from the exhaustive table
    const CostTable table(inst);
    json norm;
    std::vector<double> mins, maxs;
    std::vector<bool> degen;
    for (int k = 0; k < table.num_objectives(); ++k) {
        mins.push_back(table.raw_min(k));
        maxs.push_back(table.raw_max(k));
        degen.push_back(table.degenerate(k));
    }
    norm["raw_min"] = mins;
    norm["raw_max"] = maxs;
    norm["degenerate"] = degen;
    j["normalization"] = std::move(norm);

    write_file_atomic(path, j.dump(2) + "\n");
}

ProblemInstance load_instance(const std::filesystem::path& path) {
    const json j = json::parse(read_file(path));
    if (j.at("format").get<std::string>() != "qmoo-instance")
        throw std::runtime_error("not an instance file: " + path.string());
    ProblemInstance inst;
    inst.cls = problem_class_from_string(j.at("class").get<std::string>());
    inst.d = j.at("d").get<int>();
    inst.num_vars = j.at("N").get<int>();
    inst.num_objectives = j.at("K").get<int>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    const auto& ranges = j.at("coupling_ranges");
    inst.afm_lo = ranges.at("afm")[0].get<double>();
    inst.afm_hi = ranges.at("afm")[1].get<double>();
    inst.fm_lo = ranges.at("fm")[0].get<double>();
    inst.fm_hi = ranges.at("fm")[1].get<double>();
    for (const auto& o : j.at("objectives")) inst.objectives.push_back(objective_from_json(o));
    if (static_cast<int>(inst.objectives.size()) != inst.num_objectives)
        throw std::runtime_error("instance file K mismatch: " + path.string());
    return inst;
}

OracleData compute_oracle(const CostTable& table, bool with_scatter) {
    OracleData oracle;
    oracle.cls = table.instance().cls;
    oracle.d = table.d();
    oracle.num_vars = table.num_vars();
    oracle.seed = table.instance().seed;
    oracle.num_objectives = table.num_objectives();
    oracle.front = brute_force_pareto(table);
    const ObjectiveVector ref(table.num_objectives(), 1.0);
    oracle.front_hv = hypervolume(oracle.front.points, ref);
    if (with_scatter) {
        oracle.scatter.reserve(table.dim());
        for (BasisIndex x = 0; x < table.dim(); ++x)
            oracle.scatter.push_back(table.objective_vector(x));
    }
    return oracle;
}

void save_oracle(const OracleData& oracle, const std::filesystem::path& path) {
    json j;
    j["format"] = "qmoo-oracle";
    j["version"] = 1;
    j["class"] = to_string(oracle.cls);
    j["d"] = oracle.d;
    j["N"] = oracle.num_vars;
    j["K"] = oracle.num_objectives;
    j["seed"] = oracle.seed;
    j["front_hv"] = oracle.front_hv;
    json front = json::array();
    for (std::size_t i = 0; i < oracle.front.points.size(); ++i)
        front.push_back({{"index", oracle.front.source_indices[i]},
                         {"objectives", oracle.front.points[i]}});
    j["front"] = std::move(front);
    if (!oracle.scatter.empty()) j["scatter"] = oracle.scatter;
    write_file_atomic(path, j.dump(2) + "\n");
}

OracleData load_oracle(const std::filesystem::path& path) {
    const json j = json::parse(read_file(path));
    if (j.at("format").get<std::string>() != "qmoo-oracle")
        throw std::runtime_error("not an oracle file: " + path.string());
    OracleData oracle;
    oracle.cls = problem_class_from_string(j.at("class").get<std::string>());
    oracle.d = j.at("d").get<int>();
    oracle.num_vars = j.at("N").get<int>();
    oracle.num_objectives = j.at("K").get<int>();
    oracle.seed = j.at("seed").get<std::uint64_t>();
    oracle.front_hv = j.at("front_hv").get<double>();
    for (const auto& p : j.at("front")) {
        oracle.front.source_indices.push_back(p.at("index").get<BasisIndex>());
        oracle.front.points.push_back(p.at("objectives").get<ObjectiveVector>());
    }
    if (j.contains("scatter")) oracle.scatter = j.at("scatter").get<std::vector<ObjectiveVector>>();
    return oracle;
}

namespace {

json config_to_json(const RunConfig& c) {
    json j;
    j["kind"] = "config";
    j["algorithm"] = c.algorithm;
    j["class"] = to_string(c.cls);
    j["d"] = c.d;
    j["N"] = c.num_vars;
    j["K"] = c.num_objectives;
    j["instance_seed"] = c.instance_seed;
    j["run_index"] = c.run_index;
    j["campaign_seed"] = c.campaign_seed;
    if (c.algorithm == "qmoo") {
        j["method"] = to_string(c.method);
        j["shots"] = c.policy.exact ? json("exact") : json(c.policy.n_shots);
        j["layers"] = c.layers;
        j["n_select"] = c.n_select;
        j["line_xtol"] = c.line_xtol;
        j["line_max_evals"] = c.line_max_evals;
        j["stall_patience"] = c.stall_patience;
    }
    j["iterations"] = c.iterations;
    j["population"] = c.population;
    return j;
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.algorithm = j.at("algorithm").get<std::string>();
    c.cls = problem_class_from_string(j.at("class").get<std::string>());
    c.d = j.at("d").get<int>();
    c.num_vars = j.at("N").get<int>();
    c.num_objectives = j.at("K").get<int>();
    c.instance_seed = j.at("instance_seed").get<std::uint64_t>();
    c.run_index = j.at("run_index").get<int>();
    c.campaign_seed = j.at("campaign_seed").get<std::uint64_t>();
    if (c.algorithm == "qmoo") {
        c.method = opt_method_from_string(j.at("method").get<std::string>());
        const auto& shots = j.at("shots");
        c.policy = shots.is_string() ? ShotPolicy::exact_mode()
                                     : ShotPolicy::finite(shots.get<std::uint64_t>());
        c.layers = j.at("layers").get<int>();
        c.n_select = j.at("n_select").get<int>();
        c.line_xtol = j.at("line_xtol").get<double>();
        c.line_max_evals = j.at("line_max_evals").get<int>();
        c.stall_patience = j.at("stall_patience").get<int>();
    }
    c.iterations = j.at("iterations").get<int>();
    c.population = j.at("population").get<int>();
    return c;
}

}  // namespace

void save_run_record(const RunRecord& record, const std::filesystem::path& path) {
    std::ostringstream out;
    json header = config_to_json(record.config);
    header["front_hv"] = record.front_hv;
    out << header.dump() << "\n";
    for (const auto& row : record.rows) {
        json j;
        j["kind"] = "row";
        j["iter"] = row.iteration;
        j["hv"] = row.hv;
        j["nhv"] = row.normalized_hv;
        j["hv_draw"] = row.hv_draw;
        j["pw"] = row.pareto_weight ? json(*row.pareto_weight) : json(nullptr);
        j["evals"] = row.evaluations;
        out << j.dump() << "\n";
    }
    json fin;
    fin["kind"] = "final";
    fin["hv"] = record.final_hv;
    fin["nhv"] = record.final_normalized_hv;
    json sols = json::array();
    for (const auto& [index, objectives] : record.final_solutions)
        sols.push_back({{"index", index}, {"objectives", objectives}});
    fin["solutions"] = std::move(sols);
    out << fin.dump() << "\n";
    write_file_atomic(path, out.str());
}

RunRecord load_run_record(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    RunRecord record;
    std::string line;
    bool have_config = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "config") {
            record.config = config_from_json(j);
            record.front_hv = j.at("front_hv").get<double>();
            have_config = true;
        } else if (kind == "row") {
            RunRow row;
            row.iteration = j.at("iter").get<int>();
            row.hv = j.at("hv").get<double>();
            row.normalized_hv = j.at("nhv").get<double>();
            row.hv_draw = j.at("hv_draw").get<double>();
            if (!j.at("pw").is_null()) row.pareto_weight = j.at("pw").get<double>();
            row.evaluations = j.at("evals").get<std::uint64_t>();
            record.rows.push_back(row);
        } else if (kind == "final") {
            record.final_hv = j.at("hv").get<double>();
            record.final_normalized_hv = j.at("nhv").get<double>();
            for (const auto& s : j.at("solutions"))
                record.final_solutions.emplace_back(s.at("index").get<BasisIndex>(),
                                                    s.at("objectives").get<ObjectiveVector>());
        } else {
            throw std::runtime_error("unknown record line kind: " + kind);
        }
    }
    if (!have_config) throw std::runtime_error("record file missing config line: " + path.string());
    return record;
}

}  // namespace qmoo
