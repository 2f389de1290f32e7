#include "qmoo/circuit.hpp"

#include <stdexcept>

#include "qmoo/operators.hpp"

namespace qmoo {

CircuitParams CircuitParams::zeros(int layers, int num_objectives, int d) {
    if (layers < 1 || num_objectives < 1 || d < 2)
        throw std::domain_error("CircuitParams: invalid shape");
    CircuitParams p;
    p.layers = layers;
    p.num_objectives = num_objectives;
    p.d = d;
    p.gammas.assign(static_cast<std::size_t>(layers) * num_objectives, 0.0);
    p.betas.assign(static_cast<std::size_t>(layers) * num_objectives, {0.0, 0.0});
    return p;
}

std::vector<double> pack_params(const CircuitParams& params) {
    std::vector<double> packed;
    packed.reserve(params.packed_size());
    for (int l = 0; l < params.layers; ++l) {
        for (int k = 0; k < params.num_objectives; ++k) {
            const std::size_t i = static_cast<std::size_t>(l) * params.num_objectives + k;
            packed.push_back(params.gammas[i]);
            packed.push_back(params.betas[i][0]);
            if (params.d >= 3) packed.push_back(params.betas[i][1]);
        }
    }
    return packed;
}

CircuitParams unpack_params(std::span<const double> packed, int layers, int num_objectives,
                            int d) {
    CircuitParams p = CircuitParams::zeros(layers, num_objectives, d);
    if (static_cast<int>(packed.size()) != p.packed_size())
        throw std::domain_error("unpack_params: wrong packed length");
    std::size_t pos = 0;
    for (int l = 0; l < layers; ++l) {
        for (int k = 0; k < num_objectives; ++k) {
            const std::size_t i = static_cast<std::size_t>(l) * num_objectives + k;
            p.gammas[i] = packed[pos++];
            p.betas[i][0] = packed[pos++];
            if (d >= 3) p.betas[i][1] = packed[pos++];
        }
    }
    return p;
}

StateVector prepare_state(const CostTable& table, const CircuitParams& params) {
    if (params.num_objectives != table.num_objectives())
        throw std::domain_error("prepare_state: objective count mismatch");
    if (params.d != table.d())
        throw std::domain_error("prepare_state: local dimension mismatch");

    const QuditRegister reg(table.d(), table.num_vars());
    StateVector state = StateVector::uniform(reg);
    for (int l = 0; l < params.layers; ++l) {
        for (int k = 0; k < params.num_objectives; ++k) {
            const std::size_t i = static_cast<std::size_t>(l) * params.num_objectives + k;
            state.apply_scaled_diagonal_phase(params.gammas[i], table.column(k));
            const Eigen::MatrixXcd mixer =
                mixer_matrix(params.d, params.betas[i][0], params.betas[i][1]);
            state.apply_local_unitary_all(mixer);
        }
    }
    return state;
}

EvaluationResult evaluate_params(const CostTable& table, const CircuitParams& params,
                                 ShotPolicy policy, int n_select, Rng& rng,
                                 std::span<const BasisIndex> oracle_pareto_set,
                                 bool keep_state) {
    if (n_select < 1) throw std::domain_error("evaluate_params: n_select must be >= 1");

    StateVector state = prepare_state(table, params);

    std::vector<BasisIndex> selected;
    if (policy.exact) {
        selected = top_k(state, static_cast<std::size_t>(n_select));
    } else {
        const ShotCounts counts = sample(state, policy.n_shots, rng);
        selected = top_k(counts, static_cast<std::size_t>(n_select));
    }

    EvaluationResult result;
    result.solutions.reserve(selected.size());
    std::vector<ObjectiveVector> points;
    points.reserve(selected.size());
    for (BasisIndex x : selected) {
        ObjectiveVector v = table.objective_vector(x);
        points.push_back(v);
        result.solutions.emplace_back(x, std::move(v));
    }

    const ObjectiveVector ref(table.num_objectives(), 1.0);
    result.hv = hypervolume(points, ref);
    if (!oracle_pareto_set.empty()) result.pareto_weight = pareto_weight(state, oracle_pareto_set);
    if (keep_state) result.state = std::move(state);
    return result;
}

}  // namespace qmoo
