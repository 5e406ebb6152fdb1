// Wasserstein and bottleneck distances between persistence diagrams.

#ifndef VAB_METRICS_HPP
#define VAB_METRICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "vab/persistence.hpp"

namespace vab {

/// Ground norm used to measure the distance between two diagram points.
enum class GroundNorm { L1, L2, LInf };

/// One matched pair; an absent index stands for the diagonal.
struct MatchedPair {
    std::optional<std::size_t> first;
    std::optional<std::size_t> second;
    double distance = 0.0;  // ground-norm distance, not raised to q
};

/// Optimal matching. Only pairs involving at least one off-diagonal point are
/// listed; diagonal-to-diagonal pairs are implicit.
struct MatchingResult {
    double cost = 0.0;
    std::vector<MatchedPair> pairs;
};

/// Ground-norm distance from (birth, death) to the diagonal.
double diagonal_distance(const PersistencePoint& p, GroundNorm norm);

double ground_distance(const PersistencePoint& a, const PersistencePoint& b, GroundNorm norm);

/// Exact L_p q-Wasserstein distance by Hungarian assignment on the
/// diagonal-augmented cost matrix. `q` may be +inf, in which case the result
/// is the bottleneck distance under `norm`.
///
/// Both diagrams must hold a single homological dimension (the same one)
/// and only finite deaths; throws std::invalid_argument otherwise.
MatchingResult wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b,
                           GroundNorm norm = GroundNorm::L1, double q = 1.0);

/// Bottleneck distance: binary search over candidate costs with a bipartite
/// feasibility test. Same preconditions as wasserstein().
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b,
                  GroundNorm norm = GroundNorm::LInf);

/// Minimum-cost perfect assignment on a dense square matrix (row-major).
/// Returns the column assigned to each row.
std::vector<std::size_t> hungarian_assignment(std::span<const double> cost, std::size_t n);

}  // namespace vab

#endif  // VAB_METRICS_HPP
