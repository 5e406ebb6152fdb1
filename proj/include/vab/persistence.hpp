// Persistence diagrams in homological dimensions 0 and 1.

#ifndef VAB_PERSISTENCE_HPP
#define VAB_PERSISTENCE_HPP

#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "vab/filtration.hpp"

namespace vab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePoint {
    int dim = 0;
    double birth = 0.0;
    double death = kInfinity;

    bool essential() const { return std::isinf(death); }
    double persistence() const { return death - birth; }

    friend bool operator==(const PersistencePoint&, const PersistencePoint&) = default;
};

/// Multiset of persistence points. Diagonal points are implicit and never
/// stored. `min_value`/`max_value` record the value range of the filtration
/// the diagram came from.
struct PersistenceDiagram {
    std::vector<PersistencePoint> points;
    double min_value = 0.0;
    double max_value = 0.0;

    /// Diagram holding the given (birth, death) pairs in dimension `dim`.
    static PersistenceDiagram from_pairs(int dim,
                                         std::initializer_list<std::pair<double, double>> pairs);
    static PersistenceDiagram from_pairs(int dim, const std::vector<std::pair<double, double>>& pairs);

    /// Points of dimension `dim` only, same metadata.
    PersistenceDiagram slice(int dim) const;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    bool has_essential() const;

    /// Sorts points by (dim, birth, death), the canonical output order.
    void canonicalize();
};

struct PersistenceOptions {
    /// Keep points with birth == death.
    bool keep_zero_persistence = false;
};

/// Z/2 boundary-matrix reduction (with clearing) of a monotone filtration.
/// Throws std::invalid_argument if the filtration is not monotone.
PersistenceDiagram compute_persistence(const Filtration& f, const PersistenceOptions& opts = {});

/// Dimension-0 diagram by union-find under the elder rule; on equal births
/// the component created earlier in the filtration survives.
PersistenceDiagram h0_union_find(const Filtration& f, const PersistenceOptions& opts = {});

/// How to remove infinite deaths before distances or Betti functions.
class InfinitePolicy {
public:
    static InfinitePolicy drop() { return InfinitePolicy(false, 0.0); }
    static InfinitePolicy replace(double value) { return InfinitePolicy(true, value); }

    bool replaces() const { return replace_; }
    double value() const { return value_; }

private:
    InfinitePolicy(bool replace, double value) : replace_(replace), value_(value) {}
    bool replace_;
    double value_;
};

/// Throws std::invalid_argument when the replacement value lies below the
/// birth of some essential point.
PersistenceDiagram resolve_infinite(const PersistenceDiagram& pd, InfinitePolicy policy);

}  // namespace vab

#endif  // VAB_PERSISTENCE_HPP
