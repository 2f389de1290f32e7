#pragma once

#include <span>
#include <vector>

#include "qmoo/basis.hpp"

namespace qmoo {

class CostTable;

/// One solution's K objective values (minimization, normalized to [0,1]).
using ObjectiveVector = std::vector<double>;

/// A mutually non-dominated point set, optionally with the basis states it
/// came from. source_indices may contain several states mapping to equal
/// objective vectors; points and source_indices stay parallel.
struct ParetoFront {
    std::vector<ObjectiveVector> points;
    std::vector<BasisIndex> source_indices;

    std::size_t size() const { return points.size(); }
};

/// a weakly dominates b: a_k <= b_k for all k.
bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// a strictly dominates b: a <= b componentwise and a != b.
bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Retains the points not strictly dominated by any other; duplicate vectors
/// collapse to one representative. When source indices are given they are
/// carried along (the representative keeps the first index in input order).
ParetoFront non_dominated_filter(std::span<const ObjectiveVector> points,
                                 std::span<const BasisIndex> source_indices = {});

/// Exact hypervolume of the region dominated by `points` and bounded by `r`
/// (minimization). Points outside the box are clipped to r first; clipped
/// and dominated points contribute zero. K = 2 and K = 3 use dedicated
/// sweeps, higher K a WFG-style dimension-sweep recursion. Exact for any
/// point count; tuned for the small sets (<= 64) used during optimization.
double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& r);

/// Reference route: the same WFG-style recursion taken all the way down to
/// K = 1 with no sweep fast paths. Kept independent of hypervolume() so the
/// two can be cross-checked against each other.
double hypervolume_wfg(std::span<const ObjectiveVector> points, const ObjectiveVector& r);

/// hypervolume(points) / hypervolume(front). Throws std::domain_error when
/// the front hypervolume is zero (degenerate instance).
double normalized_hv(std::span<const ObjectiveVector> points, const ParetoFront& front,
                     const ObjectiveVector& r);

/// Exhaustive Pareto front over all d^N basis states of a cost table.
/// Returns every efficient state (ties in objective space are all kept),
/// ordered by ascending basis index.
ParetoFront brute_force_pareto(const CostTable& table);

}  // namespace qmoo
