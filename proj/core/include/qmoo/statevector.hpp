#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmoo/basis.hpp"
#include "qmoo/rng.hpp"

namespace qmoo {

/// Measurement outcome histogram: (basis index, count) pairs sorted by index.
struct ShotCounts {
    std::vector<std::pair<BasisIndex, std::uint64_t>> counts;
    std::uint64_t total = 0;
};

/// Dense state of N qudits: d^N complex amplitudes.
class StateVector {
public:
    explicit StateVector(const QuditRegister& reg);

    /// 1/sqrt(d^N) on every basis state.
    static StateVector uniform(const QuditRegister& reg);

    /// All weight on a single basis state.
    static StateVector basis_state(const QuditRegister& reg, BasisIndex index);

    const QuditRegister& reg() const { return reg_; }
    std::uint64_t dim() const { return reg_.dim; }

    std::span<const std::complex<double>> amplitudes() const { return amp_; }
    std::span<std::complex<double>> amplitudes() { return amp_; }
    std::complex<double>& operator[](BasisIndex i) { return amp_[i]; }
    const std::complex<double>& operator[](BasisIndex i) const { return amp_[i]; }

    double norm() const;

    /// amp_i <- amp_i * exp(-i * phases[i]). Size must equal dim.
    void apply_diagonal_phase(std::span<const double> phases);

    /// Same with phases[i] = gamma * costs[i]; avoids materializing the array.
    void apply_scaled_diagonal_phase(double gamma, std::span<const double> costs);

    /// Apply a d x d unitary to one qudit (0-based, 0 = most significant).
    /// U is validated to be unitary within 1e-10.
    void apply_local_unitary(const Eigen::MatrixXcd& u, int qudit);

    /// Same unitary applied to every qudit in turn.
    void apply_local_unitary_all(const Eigen::MatrixXcd& u);

private:
    QuditRegister reg_;
    std::vector<std::complex<double>> amp_;
};

/// Multinomial sampling of n_shots outcomes from |amplitude|^2.
ShotCounts sample(const StateVector& state, std::uint64_t n_shots, Rng& rng);

/// Indices of the k most frequent outcomes, ties broken by ascending index.
std::vector<BasisIndex> top_k(const ShotCounts& counts, std::size_t k);

/// Indices of the k largest spectral weights |amplitude|^2 (exact mode),
/// ties broken by ascending index.
std::vector<BasisIndex> top_k(const StateVector& state, std::size_t k);

/// Total probability weight the state places on the given basis indices.
double pareto_weight(const StateVector& state, std::span<const BasisIndex> pareto_set);

}  // namespace qmoo
