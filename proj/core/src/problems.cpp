#include "qmoo/problems.hpp"

#include <stdexcept>

#include "qmoo/rng.hpp"

namespace qmoo {

std::string to_string(ProblemClass c) {
    switch (c) {
        case ProblemClass::I: return "I";
        case ProblemClass::II: return "II";
        case ProblemClass::III: return "III";
        case ProblemClass::IV: return "IV";
        case ProblemClass::V: return "V";
    }
    throw std::domain_error("unknown problem class");
}

ProblemClass problem_class_from_string(const std::string& s) {
    if (s == "I" || s == "1") return ProblemClass::I;
    if (s == "II" || s == "2") return ProblemClass::II;
    if (s == "III" || s == "3") return ProblemClass::III;
    if (s == "IV" || s == "4") return ProblemClass::IV;
    if (s == "V" || s == "5") return ProblemClass::V;
    throw std::domain_error("unknown problem class: " + s);
}

int class_objective_count(ProblemClass c) {
    switch (c) {
        case ProblemClass::I:
        case ProblemClass::II:
        case ProblemClass::III: return 2;
        case ProblemClass::IV: return 3;
        case ProblemClass::V: return 5;
    }
    throw std::domain_error("unknown problem class");
}

double eval_raw(const ObjectiveFunction& obj, std::span<const int> x) {
    if (const auto* lin = std::get_if<LinearObjective>(&obj)) {
        if (lin->c.size() != x.size()) throw std::domain_error("eval_raw: dimension mismatch");
        double v = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) v += lin->c[i] * x[i];
        return v;
    }
    const auto& q = std::get<QuadraticObjective>(obj);
    const auto n = static_cast<std::size_t>(q.h.size());
    if (static_cast<std::size_t>(q.J.rows()) != n || static_cast<std::size_t>(q.J.cols()) != n ||
        x.size() != n)
        throw std::domain_error("eval_raw: dimension mismatch");
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        v += q.h(i) * x[i];
        v += q.J(i, i) * x[i] * x[i];
        for (std::size_t j = i + 1; j < n; ++j) v += 2.0 * q.J(i, j) * x[i] * x[j];
    }
    return v;
}

namespace {

enum class Coupling { dense, chain, chain_split_fm_first, chain_split_afm_first };

// Draws a symmetric coupling matrix. Entries are drawn row-major over the
// upper triangle, skipping entries the structure leaves at zero. `lo2/hi2`
// apply beyond the split point of the mixed chains.
Eigen::MatrixXd draw_coupling(Rng& rng, int n, Coupling structure, double lo, double hi,
                              double lo2, double hi2, int split) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const bool on_chain = (b == a + 1);
            double v = 0.0;
            switch (structure) {
                case Coupling::dense:
                    v = rng.uniform(lo, hi);
                    break;
                case Coupling::chain:
                    if (!on_chain) continue;
                    v = rng.uniform(lo, hi);
                    break;
                case Coupling::chain_split_fm_first:
                case Coupling::chain_split_afm_first:
                    if (!on_chain) continue;
                    // coupling (a, a+1) belongs to the first segment when its
                    // 1-based position a+1 is <= floor(n/2)
                    v = (a + 1 <= split) ? rng.uniform(lo, hi) : rng.uniform(lo2, hi2);
                    break;
            }
            j(a, b) = v;
            j(b, a) = v;
        }
    }
    return j;
}

// Spin-model field rule h = g - d * (1'J)' with g ~ U(-1,1)^N.
Eigen::VectorXd draw_spin_field(Rng& rng, const Eigen::MatrixXd& j, int d) {
    const int n = static_cast<int>(j.rows());
    Eigen::VectorXd g(n);
    for (int i = 0; i < n; ++i) g(i) = rng.uniform(-1.0, 1.0);
    return g - static_cast<double>(d) * j.colwise().sum().transpose();
}

QuadraticObjective afm_dense(Rng& rng, int n, int d, const ProblemInstance& meta) {
    QuadraticObjective q;
    q.J = draw_coupling(rng, n, Coupling::dense, meta.afm_lo, meta.afm_hi, 0, 0, 0);
    q.h = draw_spin_field(rng, q.J, d);
    return q;
}

QuadraticObjective fm_dense(Rng& rng, int n, int d, const ProblemInstance& meta) {
    QuadraticObjective q;
    q.J = draw_coupling(rng, n, Coupling::dense, meta.fm_lo, meta.fm_hi, 0, 0, 0);
    q.h = draw_spin_field(rng, q.J, d);
    return q;
}

// Distance objective: diagonal random scaling, h = -2 J x0 with x0
// continuous in [0, d-1]^N. Draw order: diagonal entries, then x0.
QuadraticObjective scaled_distance(Rng& rng, int n, int d, const ProblemInstance& meta) {
    QuadraticObjective q;
    q.J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) q.J(i, i) = rng.uniform(meta.afm_lo, meta.afm_hi);
    Eigen::VectorXd x0(n);
    for (int i = 0; i < n; ++i) x0(i) = rng.uniform(0.0, static_cast<double>(d - 1));
    q.h = -2.0 * q.J * x0;
    return q;
}

// Class V third objective: J = identity, h = -2 x0.
QuadraticObjective unit_distance(Rng& rng, int n, int d) {
    QuadraticObjective q;
    q.J = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd x0(n);
    for (int i = 0; i < n; ++i) x0(i) = rng.uniform(0.0, static_cast<double>(d - 1));
    q.h = -2.0 * x0;
    return q;
}

}  // namespace

ProblemInstance gen_instance(ProblemClass cls, int d, int n, std::uint64_t seed) {
    if (d < 2) throw std::domain_error("gen_instance: d must be >= 2");
    const int min_n = (cls == ProblemClass::V) ? 4 : 2;
    if (n < min_n)
        throw std::domain_error("gen_instance: N must be >= " + std::to_string(min_n) +
                                " for class " + to_string(cls));

    ProblemInstance inst;
    inst.cls = cls;
    inst.d = d;
    inst.num_vars = n;
    inst.num_objectives = class_objective_count(cls);
    inst.seed = seed;

    Rng rng(seed);
    switch (cls) {
        case ProblemClass::I: {
            LinearObjective c1, c2;
            c1.c.resize(n);
            c2.c.resize(n);
            for (int i = 0; i < n; ++i) c1.c[i] = rng.uniform(-1.0, 1.0);
            for (int i = 0; i < n; ++i) c2.c[i] = -0.5 * c1.c[i] + 0.5 * rng.uniform(-1.0, 1.0);
            inst.objectives.emplace_back(std::move(c1));
            inst.objectives.emplace_back(std::move(c2));
            break;
        }
        case ProblemClass::II: {
            inst.objectives.emplace_back(afm_dense(rng, n, d, inst));
            inst.objectives.emplace_back(fm_dense(rng, n, d, inst));
            break;
        }
        case ProblemClass::III: {
            inst.objectives.emplace_back(afm_dense(rng, n, d, inst));
            inst.objectives.emplace_back(scaled_distance(rng, n, d, inst));
            break;
        }
        case ProblemClass::IV: {
            inst.objectives.emplace_back(afm_dense(rng, n, d, inst));
            inst.objectives.emplace_back(fm_dense(rng, n, d, inst));
            inst.objectives.emplace_back(scaled_distance(rng, n, d, inst));
            break;
        }
        case ProblemClass::V: {
            const int split = n / 2;
            QuadraticObjective afm_chain;
            afm_chain.J = draw_coupling(rng, n, Coupling::chain, inst.afm_lo, inst.afm_hi, 0, 0, 0);
            afm_chain.h = draw_spin_field(rng, afm_chain.J, d);
            inst.objectives.emplace_back(std::move(afm_chain));

            QuadraticObjective fm_chain;
            fm_chain.J = draw_coupling(rng, n, Coupling::chain, inst.fm_lo, inst.fm_hi, 0, 0, 0);
            fm_chain.h = draw_spin_field(rng, fm_chain.J, d);
            inst.objectives.emplace_back(std::move(fm_chain));

            inst.objectives.emplace_back(unit_distance(rng, n, d));

            QuadraticObjective fm_afm;
            fm_afm.J = draw_coupling(rng, n, Coupling::chain_split_fm_first, inst.fm_lo, inst.fm_hi,
                                     inst.afm_lo, inst.afm_hi, split);
            fm_afm.h = draw_spin_field(rng, fm_afm.J, d);
            inst.objectives.emplace_back(std::move(fm_afm));

            QuadraticObjective afm_fm;
            afm_fm.J = draw_coupling(rng, n, Coupling::chain_split_afm_first, inst.afm_lo,
                                     inst.afm_hi, inst.fm_lo, inst.fm_hi, split);
            afm_fm.h = draw_spin_field(rng, afm_fm.J, d);
            inst.objectives.emplace_back(std::move(afm_fm));
            break;
        }
    }
    return inst;
}

CostTable::CostTable(ProblemInstance instance, std::uint64_t dim_cap)
    : instance_(std::move(instance)) {
    const QuditRegister reg(instance_.d, instance_.num_vars, dim_cap);
    dim_ = reg.dim;
    const int k = instance_.num_objectives;

    raw_min_.assign(k, 0.0);
    raw_max_.assign(k, 0.0);
    degenerate_.assign(k, 0);
    normalized_.assign(k, std::vector<double>(dim_));

    std::vector<int> digits(instance_.num_vars, 0);
    for (std::uint64_t x = 0; x < dim_; ++x) {
        for (int j = 0; j < k; ++j) {
            const double v = eval_raw(instance_.objectives[j], digits);
            normalized_[j][x] = v;
            if (x == 0 || v < raw_min_[j]) raw_min_[j] = v;
            if (x == 0 || v > raw_max_[j]) raw_max_[j] = v;
        }
        // next digit vector, least significant position last
        for (int pos = instance_.num_vars - 1; pos >= 0; --pos) {
            if (++digits[pos] < instance_.d) break;
            digits[pos] = 0;
        }
    }

    for (int j = 0; j < k; ++j) {
        const double range = raw_max_[j] - raw_min_[j];
        if (range <= 0.0) {
            degenerate_[j] = 1;
            std::fill(normalized_[j].begin(), normalized_[j].end(), 0.0);
            continue;
        }
        for (auto& v : normalized_[j]) v = (v - raw_min_[j]) / range;
    }
}

std::vector<double> CostTable::objective_vector(BasisIndex x) const {
    std::vector<double> v(num_objectives());
    for (int k = 0; k < num_objectives(); ++k) v[k] = normalized_[k][x];
    return v;
}

CostTable build_cost_table(const ProblemInstance& instance, std::uint64_t dim_cap) {
    return CostTable(instance, dim_cap);
}

}  // namespace qmoo
