#include "qmoo/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmoo {

QuditRegister::QuditRegister(int local_dim, int n, std::uint64_t dim_cap)
    : d(local_dim), num_qudits(n) {
    if (d < 2) throw std::domain_error("QuditRegister: local dimension must be >= 2");
    if (n < 1) throw std::domain_error("QuditRegister: qudit count must be >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > dim_cap / static_cast<std::uint64_t>(d))
            throw std::length_error("QuditRegister: d^N exceeds dimension cap");
        total *= static_cast<std::uint64_t>(d);
    }
    dim = total;
}

BasisIndex encode(std::span<const int> digits, const QuditRegister& reg) {
    if (static_cast<int>(digits.size()) != reg.num_qudits)
        throw std::domain_error("encode: digit count does not match register");
    BasisIndex index = 0;
    for (int x : digits) {
        if (x < 0 || x >= reg.d) throw std::domain_error("encode: digit out of range");
        index = index * static_cast<BasisIndex>(reg.d) + static_cast<BasisIndex>(x);
    }
    return index;
}

void decode_into(BasisIndex index, const QuditRegister& reg, std::span<int> digits) {
    if (index >= reg.dim) throw std::domain_error("decode: index out of range");
    if (static_cast<int>(digits.size()) != reg.num_qudits)
        throw std::domain_error("decode: digit span does not match register");
    for (int n = reg.num_qudits - 1; n >= 0; --n) {
        digits[n] = static_cast<int>(index % reg.d);
        index /= reg.d;
    }
}

std::vector<int> decode(BasisIndex index, const QuditRegister& reg) {
    std::vector<int> digits(reg.num_qudits);
    decode_into(index, reg, digits);
    return digits;
}

StateVector::StateVector(const QuditRegister& reg) : reg_(reg), amp_(reg.dim) {}

StateVector StateVector::uniform(const QuditRegister& reg) {
    StateVector s(reg);
    const double a = 1.0 / std::sqrt(static_cast<double>(reg.dim));
    std::fill(s.amp_.begin(), s.amp_.end(), std::complex<double>(a, 0.0));
    return s;
}

StateVector StateVector::basis_state(const QuditRegister& reg, BasisIndex index) {
    if (index >= reg.dim) throw std::domain_error("basis_state: index out of range");
    StateVector s(reg);
    s.amp_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::apply_diagonal_phase(std::span<const double> phases) {
    if (phases.size() != amp_.size())
        throw std::domain_error("apply_diagonal_phase: phase array length mismatch");
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        double s, c;
        sincos(phases[i], &s, &c);
        amp_[i] *= std::complex<double>(c, -s);
    }
}

void StateVector::apply_scaled_diagonal_phase(double gamma, std::span<const double> costs) {
    if (costs.size() != amp_.size())
        throw std::domain_error("apply_scaled_diagonal_phase: cost array length mismatch");
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        double s, c;
        sincos(gamma * costs[i], &s, &c);
        amp_[i] *= std::complex<double>(c, -s);
    }
}

namespace {

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    return (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

void StateVector::apply_local_unitary(const Eigen::MatrixXcd& u, int qudit) {
    const int d = reg_.d;
    const int n = reg_.num_qudits;
    if (qudit < 0 || qudit >= n) throw std::domain_error("apply_local_unitary: qudit index out of range");
    if (u.rows() != d || u.cols() != d)
        throw std::domain_error("apply_local_unitary: matrix size does not match local dimension");
    if (!is_unitary(u, 1e-10)) throw std::domain_error("apply_local_unitary: matrix is not unitary");

    // amp index = (outer * d + x) * inner + i with x the target digit.
    std::uint64_t inner = 1;
    for (int q = qudit + 1; q < n; ++q) inner *= d;
    const std::uint64_t outer = reg_.dim / (inner * d);

    // row-major real/imag copies of U; the hot loop runs on raw doubles
    std::vector<double> ur(static_cast<std::size_t>(d) * d), ui(ur.size());
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            ur[static_cast<std::size_t>(r) * d + c] = u(r, c).real();
            ui[static_cast<std::size_t>(r) * d + c] = u(r, c).imag();
        }

    // For each (outer, i) the d strided amplitudes form an independent
    // d-vector, so the transform is done in place in one pass.
    std::vector<double> vr(d), vi(d);
    for (std::uint64_t o = 0; o < outer; ++o) {
        std::complex<double>* block = amp_.data() + o * d * inner;
        for (std::uint64_t i = 0; i < inner; ++i) {
            for (int x = 0; x < d; ++x) {
                const std::complex<double>& a = block[static_cast<std::uint64_t>(x) * inner + i];
                vr[x] = a.real();
                vi[x] = a.imag();
            }
            for (int r = 0; r < d; ++r) {
                const double* rowr = ur.data() + static_cast<std::size_t>(r) * d;
                const double* rowi = ui.data() + static_cast<std::size_t>(r) * d;
                double sr = 0.0, si = 0.0;
                for (int x = 0; x < d; ++x) {
                    sr += rowr[x] * vr[x] - rowi[x] * vi[x];
                    si += rowr[x] * vi[x] + rowi[x] * vr[x];
                }
                block[static_cast<std::uint64_t>(r) * inner + i] = {sr, si};
            }
        }
    }
}

void StateVector::apply_local_unitary_all(const Eigen::MatrixXcd& u) {
    for (int q = 0; q < reg_.num_qudits; ++q) apply_local_unitary(u, q);
}

ShotCounts sample(const StateVector& state, std::uint64_t n_shots, Rng& rng) {
    if (n_shots < 1) throw std::domain_error("sample: n_shots must be >= 1");
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    const double total = acc;

    std::vector<BasisIndex> outcomes;
    outcomes.reserve(n_shots);
    for (std::uint64_t s = 0; s < n_shots; ++s) {
        const double u = rng.uniform01() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto idx = static_cast<std::size_t>(it - cdf.begin());
        if (idx >= cdf.size()) idx = cdf.size() - 1;
        outcomes.push_back(static_cast<BasisIndex>(idx));
    }
    std::sort(outcomes.begin(), outcomes.end());

    ShotCounts counts;
    counts.total = n_shots;
    for (std::size_t i = 0; i < outcomes.size();) {
        std::size_t j = i;
        while (j < outcomes.size() && outcomes[j] == outcomes[i]) ++j;
        counts.counts.emplace_back(outcomes[i], static_cast<std::uint64_t>(j - i));
        i = j;
    }
    return counts;
}

std::vector<BasisIndex> top_k(const ShotCounts& counts, std::size_t k) {
    if (k < 1) throw std::domain_error("top_k: k must be >= 1");
    std::vector<std::pair<BasisIndex, std::uint64_t>> sorted = counts.counts;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    const std::size_t m = std::min(k, sorted.size());
    std::vector<BasisIndex> result(m);
    for (std::size_t i = 0; i < m; ++i) result[i] = sorted[i].first;
    return result;
}

std::vector<BasisIndex> top_k(const StateVector& state, std::size_t k) {
    if (k < 1) throw std::domain_error("top_k: k must be >= 1");
    const auto amps = state.amplitudes();
    std::vector<BasisIndex> order(amps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<BasisIndex>(i);
    const auto better = [&amps](BasisIndex a, BasisIndex b) {
        const double wa = std::norm(amps[a]);
        const double wb = std::norm(amps[b]);
        if (wa != wb) return wa > wb;
        return a < b;
    };
    const std::size_t m = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + m, order.end(), better);
    order.resize(m);
    return order;
}

double pareto_weight(const StateVector& state, std::span<const BasisIndex> pareto_set) {
    double w = 0.0;
    for (BasisIndex i : pareto_set) {
        if (i >= state.dim()) throw std::domain_error("pareto_weight: index out of range");
        w += std::norm(state[i]);
    }
    return w;
}

}  // namespace qmoo
