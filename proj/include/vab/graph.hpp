// Node-attributed undirected graphs and the small set of structural
// operations the topological pipeline needs: clique 2-expansion
// (triangles), attribute rescaling, activity trimming and hop distances.

#ifndef VAB_GRAPH_HPP
#define VAB_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vab {

using NodeId = std::uint32_t;

/// Undirected edge stored with `u < v`.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Triangle = std::array<NodeId, 3>;

/// Immutable undirected simple graph with one finite real attribute per node.
///
/// Nodes carry dense ids `0..n-1` in the order their labels were first
/// supplied; the original labels are kept for output and tie-breaking.
class AttributedGraph {
public:
    AttributedGraph() = default;

    /// Builds a graph from labelled edges and per-node attributes.
    ///
    /// Node ids follow the order of `attrs`. Duplicate edges (in either
    /// orientation) collapse to one. Throws std::invalid_argument on a
    /// self-loop, on an edge endpoint missing from `attrs`, on a label
    /// listed twice in `attrs`, or on a non-finite attribute.
    static AttributedGraph build(std::span<const std::pair<std::string, std::string>> edges,
                                 std::span<const std::pair<std::string, double>> attrs);

    /// Same as build() for graphs whose nodes are already `0..n-1`; labels
    /// become the decimal ids.
    static AttributedGraph from_indexed(std::size_t node_count, std::span<const Edge> edges,
                                        std::vector<double> attrs);

    std::size_t node_count() const { return attrs_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const double> attrs() const { return attrs_; }
    double attr(NodeId n) const { return attrs_[n]; }
    const std::string& label(NodeId n) const { return labels_[n]; }
    std::span<const std::string> labels() const { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;

    /// Sorted neighbour ids of `n`.
    std::span<const NodeId> neighbors(NodeId n) const {
        return {adjacency_.data() + offsets_[n], adjacency_.data() + offsets_[n + 1]};
    }
    std::size_t degree(NodeId n) const { return offsets_[n + 1] - offsets_[n]; }
    bool has_edge(NodeId a, NodeId b) const;

    /// Copy of this graph with the attribute vector replaced.
    AttributedGraph with_attrs(std::vector<double> attrs) const;

    /// Subgraph induced by `keep`; kept nodes retain their relative order.
    AttributedGraph induced(std::span<const NodeId> keep) const;

private:
    AttributedGraph(std::vector<std::string> labels, std::vector<double> attrs,
                    std::vector<Edge> edges);

    std::vector<std::string> labels_;
    std::vector<double> attrs_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::unordered_map<std::string, NodeId> index_;
};

/// All triangles `{u < v < w}` of the graph in lexicographic order.
std::vector<Triangle> enumerate_triangles(const AttributedGraph& g);

/// Min-max rescales the attributes into [0,1]. A constant attribute maps to 0.
AttributedGraph normalize_attributes(const AttributedGraph& g);

/// Keeps the `max_nodes` nodes of highest `activity` (indexed by node id);
/// ties go to the lexicographically smaller label. Returns the graph
/// unchanged when it already has at most `max_nodes` nodes.
AttributedGraph trim_top_active(const AttributedGraph& g, std::span<const double> activity,
                                std::size_t max_nodes);

/// Degree of every node as a double, the default activity measure.
std::vector<double> degree_activity(const AttributedGraph& g);

/// Dense symmetric matrix of pairwise distances; +inf marks unreachable pairs.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double value);

    /// Largest finite off-diagonal entry, 0 when there is none.
    double max_finite() const;

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Unit-weight shortest-path lengths (BFS from every node).
DistanceMatrix geodesic_distance_matrix(const AttributedGraph& g);

}  // namespace vab

#endif  // VAB_GRAPH_HPP
