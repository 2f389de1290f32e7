#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qmoo {

/// Index of a computational basis state, in [0, d^N).
using BasisIndex = std::uint64_t;

/// A register of N qudits with local dimension d.
///
/// Basis convention is big-endian mixed radix: digit vector (x_1,...,x_N)
/// maps to index sum_n x_n * d^(N-n), i.e. x_1 is the most significant digit,
/// matching the ket |x_1,...,x_N>.
struct QuditRegister {
    static constexpr std::uint64_t kDefaultDimCap = 1ull << 24;

    int d = 2;
    int num_qudits = 1;
    std::uint64_t dim = 2;

    QuditRegister(int local_dim, int n, std::uint64_t dim_cap = kDefaultDimCap);
};

BasisIndex encode(std::span<const int> digits, const QuditRegister& reg);

void decode_into(BasisIndex index, const QuditRegister& reg, std::span<int> digits);

std::vector<int> decode(BasisIndex index, const QuditRegister& reg);

}  // namespace qmoo
