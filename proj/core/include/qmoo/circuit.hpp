#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qmoo/moo.hpp"
#include "qmoo/problems.hpp"
#include "qmoo/rng.hpp"
#include "qmoo/statevector.hpp"

namespace qmoo {

/// Variational angles of an L-layer circuit over K objectives. Block (l,k)
/// has one phase angle gamma and mixer angles (beta1, beta2); the beta2 slot
/// exists for every d but is excluded from the packed vector when d = 2, so
/// the packed length is 3LK for d >= 3 and 2LK for d = 2.
struct CircuitParams {
    int layers = 1;
    int num_objectives = 1;
    int d = 2;
    std::vector<double> gammas;                // L*K, index l*K + k
    std::vector<std::array<double, 2>> betas;  // L*K, same indexing

    static CircuitParams zeros(int layers, int num_objectives, int d);

    int packed_size() const { return layers * num_objectives * (d == 2 ? 2 : 3); }
};

/// Packing layout: for l = 1..L, for k = 1..K: gamma, beta1[, beta2 if d>=3].
std::vector<double> pack_params(const CircuitParams& params);
CircuitParams unpack_params(std::span<const double> packed, int layers, int num_objectives, int d);

/// Solution extraction mode: a finite number of measurement shots, or the
/// exact spectral weights (the full-tomography limit).
struct ShotPolicy {
    bool exact = false;
    std::uint64_t n_shots = 0;

    static ShotPolicy exact_mode() { return {true, 0}; }
    static ShotPolicy finite(std::uint64_t shots) { return {false, shots}; }
};

/// Runs the circuit on the uniform initial state: per layer, per objective k
/// in ascending order, the diagonal phase exp(-i gamma_lk H_k) (H_k given by
/// the normalized costs) followed by the mixer on every qudit.
StateVector prepare_state(const CostTable& table, const CircuitParams& params);

struct EvaluationResult {
    double hv = 0.0;
    std::vector<std::pair<BasisIndex, ObjectiveVector>> solutions;
    std::optional<double> pareto_weight;
    std::optional<StateVector> state;
};

/// Full evaluation of a parameter vector: prepare, extract the n_select most
/// frequent (or heaviest) solutions, map them through the cost table and
/// score the hypervolume against r = (1,...,1). When oracle_pareto_set is
/// given, the state's weight on it is reported as a diagnostic.
EvaluationResult evaluate_params(const CostTable& table, const CircuitParams& params,
                                 ShotPolicy policy, int n_select, Rng& rng,
                                 std::span<const BasisIndex> oracle_pareto_set = {},
                                 bool keep_state = false);

}  // namespace qmoo
