#include "qmoo/moo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qmoo/problems.hpp"

namespace qmoo {

bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) throw std::domain_error("weakly_dominates: dimension mismatch");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) throw std::domain_error("strictly_dominates: dimension mismatch");
    bool strict = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strict = true;
    }
    return strict;
}

ParetoFront non_dominated_filter(std::span<const ObjectiveVector> points,
                                 std::span<const BasisIndex> source_indices) {
    const bool with_src = !source_indices.empty();
    if (with_src && source_indices.size() != points.size())
        throw std::domain_error("non_dominated_filter: index list length mismatch");

    ParetoFront front;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ObjectiveVector& p = points[i];
        bool keep = true;
        for (std::size_t j = 0; j < points.size() && keep; ++j) {
            if (j == i) continue;
            if (strictly_dominates(points[j], p)) keep = false;
        }
        if (!keep) continue;
        // collapse duplicates: keep the first occurrence only
        bool duplicate = false;
        for (std::size_t j = 0; j < i && !duplicate; ++j)
            if (points[j] == p) duplicate = true;
        if (duplicate) continue;
        front.points.push_back(p);
        if (with_src) front.source_indices.push_back(source_indices[i]);
    }
    return front;
}

namespace {

// Flat row-major point matrix used by the hypervolume recursions.
struct Flat {
    std::vector<double> v;
    int k = 0;
    std::size_t n = 0;
    double* row(std::size_t i) { return v.data() + static_cast<std::size_t>(k) * i; }
    const double* row(std::size_t i) const { return v.data() + static_cast<std::size_t>(k) * i; }
};

bool row_weakly_dominates(const double* a, const double* b, int k) {
    for (int j = 0; j < k; ++j)
        if (a[j] > b[j]) return false;
    return true;
}

// Strict-dominance filter with duplicate collapse.
void filter_flat(Flat& s) {
    std::vector<char> keep(s.n, 1);
    for (std::size_t i = 0; i < s.n; ++i) {
        const double* p = s.row(i);
        for (std::size_t j = 0; j < s.n; ++j) {
            if (j == i) continue;
            const double* q = s.row(j);
            if (!row_weakly_dominates(q, p, s.k)) continue;
            if (!std::equal(p, p + s.k, q) || j < i) {
                keep[i] = 0;  // strictly dominated, or duplicate of an earlier row
                break;
            }
        }
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < s.n; ++i) {
        if (!keep[i]) continue;
        if (out != i) std::copy(s.row(i), s.row(i) + s.k, s.row(out));
        ++out;
    }
    s.n = out;
}

double hv_sweep_2d(Flat& s, const double* r) {
    std::vector<std::pair<double, double>> pts(s.n);
    for (std::size_t i = 0; i < s.n; ++i) pts[i] = {s.row(i)[0], s.row(i)[1]};
    std::sort(pts.begin(), pts.end());
    double hv = 0.0;
    double level = r[1];
    for (const auto& [x, y] : pts) {
        if (y < level) {
            hv += (r[0] - x) * (level - y);
            level = y;
        }
    }
    return hv;
}

// Dimension sweep in z with an incrementally maintained 2D staircase.
double hv_sweep_3d(Flat& s, const double* r) {
    std::vector<std::size_t> order(s.n);
    for (std::size_t i = 0; i < s.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&s](std::size_t a, std::size_t b) { return s.row(a)[2] < s.row(b)[2]; });

    std::map<double, double> stair;  // x -> y, strictly decreasing y over increasing x
    double area = 0.0;
    double volume = 0.0;
    double prev_z = 0.0;
    bool first = true;
    for (std::size_t oi : order) {
        const double x = s.row(oi)[0];
        const double y = s.row(oi)[1];
        const double z = s.row(oi)[2];
        if (!first) volume += area * (z - prev_z);
        prev_z = z;
        first = false;

        auto it = stair.lower_bound(x);
        if (it != stair.begin()) {
            auto prev = std::prev(it);
            if (prev->second <= y) continue;  // 2D-dominated
        }
        if (it != stair.end() && it->first == x && it->second <= y) continue;

        double cur_x = x;
        double level = (it == stair.begin()) ? r[1] : std::prev(it)->second;
        while (it != stair.end() && it->second >= y) {
            area += (it->first - cur_x) * (level - y);
            cur_x = it->first;
            level = it->second;
            it = stair.erase(it);
        }
        const double right = (it == stair.end()) ? r[0] : it->first;
        area += (right - cur_x) * (level - y);
        stair.emplace(x, y);
    }
    if (!first) volume += area * (r[2] - prev_z);
    return volume;
}

// WFG-style recursion. Points are sorted by descending last coordinate, so
// every limit set is constant in that coordinate and the recursion drops one
// dimension per level.
double hv_recurse(Flat& s, const double* r, bool use_sweeps) {
    if (s.n == 0) return 0.0;
    const int k = s.k;
    if (k == 1) {
        double best = r[0];
        for (std::size_t i = 0; i < s.n; ++i) best = std::min(best, s.row(i)[0]);
        return r[0] - best;
    }
    if (use_sweeps) {
        if (k == 2) return hv_sweep_2d(s, r);
        if (k == 3) return hv_sweep_3d(s, r);
    }
    if (s.n == 1) {
        double box = 1.0;
        for (int j = 0; j < k; ++j) box *= r[j] - s.row(0)[j];
        return box;
    }

    std::vector<std::size_t> order(s.n);
    for (std::size_t i = 0; i < s.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&s, k](std::size_t a, std::size_t b) {
        return s.row(a)[k - 1] > s.row(b)[k - 1];
    });

    double total = 0.0;
    Flat limit;
    limit.k = k - 1;
    for (std::size_t i = 0; i < s.n; ++i) {
        const double* p = s.row(order[i]);
        double box = 1.0;
        for (int j = 0; j < k; ++j) box *= r[j] - p[j];
        if (box <= 0.0) continue;

        limit.n = s.n - i - 1;
        limit.v.assign(limit.n * static_cast<std::size_t>(k - 1), 0.0);
        for (std::size_t t = 0; t < limit.n; ++t) {
            const double* q = s.row(order[i + 1 + t]);
            double* dst = limit.row(t);
            for (int j = 0; j < k - 1; ++j) dst[j] = std::max(q[j], p[j]);
        }
        filter_flat(limit);
        const double slab = hv_recurse(limit, r, use_sweeps);
        total += box - (r[k - 1] - p[k - 1]) * slab;
    }
    return total;
}

Flat clip_points(std::span<const ObjectiveVector> points, const ObjectiveVector& r) {
    const int k = static_cast<int>(r.size());
    if (k < 2) throw std::domain_error("hypervolume: at least two objectives required");
    Flat s;
    s.k = k;
    s.n = points.size();
    s.v.resize(s.n * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (static_cast<int>(points[i].size()) != k)
            throw std::domain_error("hypervolume: point dimension mismatch");
        double* dst = s.row(i);
        for (int j = 0; j < k; ++j) {
            const double v = points[i][j];
            if (!std::isfinite(v)) throw std::domain_error("hypervolume: non-finite coordinate");
            dst[j] = std::min(v, r[j]);
        }
    }
    return s;
}

}  // namespace

double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& r) {
    Flat s = clip_points(points, r);
    filter_flat(s);  // dominated points must contribute exactly zero
    return hv_recurse(s, r.data(), /*use_sweeps=*/true);
}

double hypervolume_wfg(std::span<const ObjectiveVector> points, const ObjectiveVector& r) {
    Flat s = clip_points(points, r);
    filter_flat(s);
    return hv_recurse(s, r.data(), /*use_sweeps=*/false);
}

double normalized_hv(std::span<const ObjectiveVector> points, const ParetoFront& front,
                     const ObjectiveVector& r) {
    const double denom = hypervolume(front.points, r);
    if (denom <= 0.0)
        throw std::domain_error("normalized_hv: front hypervolume is zero (degenerate instance)");
    return hypervolume(points, r) / denom;
}

ParetoFront brute_force_pareto(const CostTable& table) {
    const std::uint64_t dim = table.dim();
    const int k = table.num_objectives();

    ParetoFront archive;
    ObjectiveVector p(k);
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (int j = 0; j < k; ++j) p[j] = table.normalized_cost(j, x);
        bool dominated = false;
        for (const auto& a : archive.points) {
            if (strictly_dominates(a, p)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::size_t out = 0;
        for (std::size_t i = 0; i < archive.points.size(); ++i) {
            if (strictly_dominates(p, archive.points[i])) continue;
            if (out != i) {
                archive.points[out] = std::move(archive.points[i]);
                archive.source_indices[out] = archive.source_indices[i];
            }
            ++out;
        }
        archive.points.resize(out);
        archive.source_indices.resize(out);
        archive.points.push_back(p);
        archive.source_indices.push_back(x);
    }
    return archive;
}

}  // namespace qmoo
