// Filtered simplicial complexes of dimension <= 2.

#ifndef VAB_FILTRATION_HPP
#define VAB_FILTRATION_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vab/graph.hpp"

namespace vab {

/// A vertex, edge or triangle. Unused vertex slots are zero; the used ones
/// are strictly increasing.
struct Simplex {
    std::array<NodeId, 3> vertices{};
    int dim = 0;

    static Simplex vertex(NodeId a) { return {{a, 0, 0}, 0}; }
    static Simplex edge(NodeId a, NodeId b);
    static Simplex triangle(NodeId a, NodeId b, NodeId c);

    std::span<const NodeId> span() const {
        return {vertices.data(), static_cast<std::size_t>(dim + 1)};
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

struct FiltrationEntry {
    Simplex simplex;
    double value = 0.0;
};

/// Simplices sorted by (value, dimension, vertices). The order is total, so
/// constructing from an already sorted list leaves it unchanged.
class Filtration {
public:
    Filtration() = default;
    explicit Filtration(std::vector<FiltrationEntry> entries);

    std::span<const FiltrationEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const FiltrationEntry& operator[](std::size_t i) const { return entries_[i]; }

    double min_value() const;
    double max_value() const;

    /// Describes the first simplex whose face is missing or enters later;
    /// empty when the filtration is monotone.
    std::optional<std::string> monotonicity_violation() const;
    bool is_monotone() const { return !monotonicity_violation().has_value(); }

private:
    std::vector<FiltrationEntry> entries_;
};

/// Strict total order used by Filtration.
bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b);

/// Nodes, edges and triangles of `g`, each valued at the largest attribute
/// among its vertices.
Filtration lower_star_filtration(const AttributedGraph& g);

/// Rips filtration up to dimension 2: vertices at 0, an edge at its length,
/// a triangle at its longest side, all truncated at `t_max`. Pairs at
/// infinite distance never enter. Throws std::invalid_argument if t_max < 0.
Filtration vietoris_rips_filtration(const DistanceMatrix& dm, double t_max);

/// Rips filtration over the full finite range of `dm`.
Filtration vietoris_rips_filtration(const DistanceMatrix& dm);

}  // namespace vab

#endif  // VAB_FILTRATION_HPP
