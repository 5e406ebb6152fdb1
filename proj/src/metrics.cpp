#include "vab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vab {
namespace {

void check_diagrams(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    std::optional<int> dim;
    for (const auto* pd : {&a, &b}) {
        for (const PersistencePoint& p : pd->points) {
            if (p.essential()) {
                throw std::invalid_argument(
                    "diagram has an infinite death; resolve infinite points first");
            }
            if (dim && *dim != p.dim) {
                throw std::invalid_argument("diagrams mix homological dimensions");
            }
            dim = p.dim;
        }
    }
}

double power(double x, double q) { return q == 1.0 ? x : std::pow(x, q); }

}  // namespace

double diagonal_distance(const PersistencePoint& p, GroundNorm norm) {
    const double half = (p.death - p.birth) / 2.0;
    switch (norm) {
        case GroundNorm::L1: return 2.0 * half;
        case GroundNorm::L2: return std::sqrt(2.0) * half;
        case GroundNorm::LInf: return half;
    }
    return half;
}

double ground_distance(const PersistencePoint& a, const PersistencePoint& b, GroundNorm norm) {
    const double db = std::abs(a.birth - b.birth);
    const double dd = std::abs(a.death - b.death);
    switch (norm) {
        case GroundNorm::L1: return db + dd;
        case GroundNorm::L2: return std::hypot(db, dd);
        case GroundNorm::LInf: return std::max(db, dd);
    }
    return db + dd;
}

std::vector<std::size_t> hungarian_assignment(std::span<const double> cost, std::size_t n) {
    if (cost.size() != n * n) throw std::invalid_argument("cost matrix is not n x n");
    // Shortest augmenting path with row/column potentials; 1-based with a
    // virtual column 0.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<bool> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n);
    for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

MatchingResult wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b,
                           GroundNorm norm, double q) {
    check_diagrams(a, b);
    if (!(q >= 1.0)) throw std::invalid_argument("q must be at least 1");

    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;
    MatchingResult result;
    if (n == 0) return result;

    if (std::isinf(q)) {
        result.cost = bottleneck(a, b, norm);
        return result;
    }

    // Rows: points of `a`, then diagonal slots for `b`. Columns: points of
    // `b`, then diagonal slots for `a`. Diagonal slots are interchangeable.
    std::vector<double> cost(n * n, 0.0);
    for (std::size_t i = 0; i < n1; ++i) {
        const double to_diag = power(diagonal_distance(a.points[i], norm), q);
        for (std::size_t j = 0; j < n2; ++j) {
            cost[i * n + j] = power(ground_distance(a.points[i], b.points[j], norm), q);
        }
        for (std::size_t j = n2; j < n; ++j) cost[i * n + j] = to_diag;
    }
    for (std::size_t j = 0; j < n2; ++j) {
        const double to_diag = power(diagonal_distance(b.points[j], norm), q);
        for (std::size_t i = n1; i < n; ++i) cost[i * n + j] = to_diag;
    }

    const auto assign = hungarian_assignment(cost, n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = assign[i];
        if (i < n1 && j < n2) {
            const double dist = ground_distance(a.points[i], b.points[j], norm);
            result.pairs.push_back({i, j, dist});
            total += power(dist, q);
        } else if (i < n1) {
            const double dist = diagonal_distance(a.points[i], norm);
            result.pairs.push_back({i, std::nullopt, dist});
            total += power(dist, q);
        } else if (j < n2) {
            const double dist = diagonal_distance(b.points[j], norm);
            result.pairs.push_back({std::nullopt, j, dist});
            total += power(dist, q);
        }
    }
    result.cost = q == 1.0 ? total : std::pow(total, 1.0 / q);
    return result;
}

namespace {

// Kuhn's augmenting-path matching on the augmented bipartite graph where a
// pair is admissible when its cost does not exceed `limit`.
bool perfect_matching_within(const PersistenceDiagram& a, const PersistenceDiagram& b,
                             GroundNorm norm, double limit) {
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;
    auto admissible = [&](std::size_t i, std::size_t j) {
        if (i < n1 && j < n2) return ground_distance(a.points[i], b.points[j], norm) <= limit;
        if (i < n1) return diagonal_distance(a.points[i], norm) <= limit;
        if (j < n2) return diagonal_distance(b.points[j], norm) <= limit;
        return true;
    };
    constexpr std::size_t free_slot = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> match_col(n, free_slot);
    std::vector<bool> seen(n);
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[j] || !admissible(i, j)) continue;
            seen[j] = true;
            if (match_col[j] == free_slot || self(self, match_col[j])) {
                match_col[j] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        if (!augment(augment, i)) return false;
    }
    return true;
}

}  // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, GroundNorm norm) {
    check_diagrams(a, b);
    std::vector<double> candidates{0.0};
    for (const auto& p : a.points) {
        candidates.push_back(diagonal_distance(p, norm));
        for (const auto& r : b.points) candidates.push_back(ground_distance(p, r, norm));
    }
    for (const auto& r : b.points) candidates.push_back(diagonal_distance(r, norm));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Matching every point to the diagonal is always feasible, so the
    // largest candidate succeeds.
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (perfect_matching_within(a, b, norm, candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

}  // namespace vab
