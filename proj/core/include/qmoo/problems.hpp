#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qmoo/basis.hpp"

namespace qmoo {

/// The five benchmark problem classes. I is linear bi-objective, II-V are
/// built from quadratic spin-model costs x'Jx + h'x.
enum class ProblemClass { I, II, III, IV, V };

std::string to_string(ProblemClass c);
ProblemClass problem_class_from_string(const std::string& s);

/// Number of objectives of a class: I,II,III -> 2; IV -> 3; V -> 5.
int class_objective_count(ProblemClass c);

struct LinearObjective {
    std::vector<double> c;
};

struct QuadraticObjective {
    Eigen::MatrixXd J;  // symmetric
    Eigen::VectorXd h;
};

using ObjectiveFunction = std::variant<LinearObjective, QuadraticObjective>;

/// Raw cost of a digit vector: c.x for linear, x'Jx + h'x for quadratic.
double eval_raw(const ObjectiveFunction& obj, std::span<const int> x);

/// One seeded benchmark instance.
///
/// Generation is bit-reproducible: a single mt19937_64 stream seeded with
/// `seed`, fixed per-class draw order (for each objective in turn: coupling
/// entries row-major over the upper triangle, then the field vector g, then
/// the target point x0 where applicable), and the fixed uniform mapping of
/// qmoo::Rng.
struct ProblemInstance {
    ProblemClass cls = ProblemClass::I;
    int d = 2;
    int num_vars = 2;
    int num_objectives = 2;
    std::uint64_t seed = 0;
    std::vector<ObjectiveFunction> objectives;

    // coupling ranges used for this instance (recorded so files are
    // self-describing; the defaults follow the AFM/FM sign conventions)
    double afm_lo = 0.5, afm_hi = 1.0;
    double fm_lo = -1.0, fm_hi = -0.5;
};

ProblemInstance gen_instance(ProblemClass cls, int d, int n, std::uint64_t seed);

/// Exhaustively enumerated, per-objective min-max normalized costs of one
/// instance over all d^N basis states.
class CostTable {
public:
    CostTable(ProblemInstance instance, std::uint64_t dim_cap = QuditRegister::kDefaultDimCap);

    const ProblemInstance& instance() const { return instance_; }
    std::uint64_t dim() const { return dim_; }
    int num_objectives() const { return instance_.num_objectives; }
    int d() const { return instance_.d; }
    int num_vars() const { return instance_.num_vars; }

    double raw_min(int k) const { return raw_min_[k]; }
    double raw_max(int k) const { return raw_max_[k]; }
    /// True when objective k is constant over the whole domain (its
    /// normalized column is all zeros).
    bool degenerate(int k) const { return degenerate_[k] != 0; }

    double normalized_cost(int k, BasisIndex x) const { return normalized_[k][x]; }
    std::span<const double> column(int k) const { return normalized_[k]; }

    std::vector<double> objective_vector(BasisIndex x) const;

private:
    ProblemInstance instance_;
    std::uint64_t dim_ = 0;
    std::vector<double> raw_min_, raw_max_;
    std::vector<char> degenerate_;
    std::vector<std::vector<double>> normalized_;
};

CostTable build_cost_table(const ProblemInstance& instance,
                           std::uint64_t dim_cap = QuditRegister::kDefaultDimCap);

}  // namespace qmoo
