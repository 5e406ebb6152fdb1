#include "vab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace vab {

AttributedGraph::AttributedGraph(std::vector<std::string> labels, std::vector<double> attrs,
                                 std::vector<Edge> edges)
    : labels_(std::move(labels)), attrs_(std::move(attrs)), edges_(std::move(edges)) {
    const std::size_t n = attrs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(attrs_[i])) {
            throw std::invalid_argument("attribute of node '" + labels_[i] + "' is not finite");
        }
        if (!index_.emplace(labels_[i], static_cast<NodeId>(i)).second) {
            throw std::invalid_argument("node '" + labels_[i] + "' listed twice");
        }
    }
    for (Edge& e : edges_) {
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at node '" + labels_[e.u] + "'");
        }
        if (e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    }
}

AttributedGraph AttributedGraph::build(
    std::span<const std::pair<std::string, std::string>> edges,
    std::span<const std::pair<std::string, double>> attrs) {
    std::vector<std::string> labels;
    std::vector<double> values;
    std::unordered_map<std::string, NodeId> index;
    labels.reserve(attrs.size());
    values.reserve(attrs.size());
    for (const auto& [label, value] : attrs) {
        if (!index.emplace(label, static_cast<NodeId>(labels.size())).second) {
            throw std::invalid_argument("node '" + label + "' listed twice");
        }
        labels.push_back(label);
        values.push_back(value);
    }
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop at node '" + a + "'");
        const auto ia = index.find(a);
        const auto ib = index.find(b);
        if (ia == index.end()) throw std::invalid_argument("node '" + a + "' has no attribute");
        if (ib == index.end()) throw std::invalid_argument("node '" + b + "' has no attribute");
        out.push_back({ia->second, ib->second});
    }
    return AttributedGraph(std::move(labels), std::move(values), std::move(out));
}

AttributedGraph AttributedGraph::from_indexed(std::size_t node_count, std::span<const Edge> edges,
                                              std::vector<double> attrs) {
    if (attrs.size() != node_count) {
        throw std::invalid_argument("attribute count does not match node count");
    }
    std::vector<std::string> labels(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels[i] = std::to_string(i);
    return AttributedGraph(std::move(labels), std::move(attrs),
                           std::vector<Edge>(edges.begin(), edges.end()));
}

std::optional<NodeId> AttributedGraph::find(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool AttributedGraph::has_edge(NodeId a, NodeId b) const {
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

AttributedGraph AttributedGraph::with_attrs(std::vector<double> attrs) const {
    if (attrs.size() != node_count()) {
        throw std::invalid_argument("attribute count does not match node count");
    }
    return AttributedGraph(labels_, std::move(attrs), edges_);
}

AttributedGraph AttributedGraph::induced(std::span<const NodeId> keep) const {
    std::vector<NodeId> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    constexpr NodeId absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> remap(node_count(), absent);
    std::vector<std::string> labels;
    std::vector<double> values;
    for (NodeId old : sorted) {
        if (old >= node_count()) throw std::invalid_argument("node id out of range");
        remap[old] = static_cast<NodeId>(labels.size());
        labels.push_back(labels_[old]);
        values.push_back(attrs_[old]);
    }
    std::vector<Edge> out;
    for (const Edge& e : edges_) {
        if (remap[e.u] != absent && remap[e.v] != absent) out.push_back({remap[e.u], remap[e.v]});
    }
    return AttributedGraph(std::move(labels), std::move(values), std::move(out));
}

std::vector<Triangle> enumerate_triangles(const AttributedGraph& g) {
    std::vector<Triangle> out;
    std::vector<NodeId> common;
    for (const Edge& e : g.edges()) {
        const auto nu = g.neighbors(e.u);
        const auto nv = g.neighbors(e.v);
        // Third vertex must exceed v so each triangle is emitted once.
        auto from_u = std::upper_bound(nu.begin(), nu.end(), e.v);
        auto from_v = std::upper_bound(nv.begin(), nv.end(), e.v);
        common.clear();
        std::set_intersection(from_u, nu.end(), from_v, nv.end(), std::back_inserter(common));
        for (NodeId w : common) out.push_back({e.u, e.v, w});
    }
    // Edges are sorted by (u, v) and w ascends within an edge, so `out` is sorted.
    return out;
}

AttributedGraph normalize_attributes(const AttributedGraph& g) {
    const auto a = g.attrs();
    if (a.empty()) return g;
    const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    const double min = *lo;
    const double range = *hi - *lo;
    std::vector<double> out(a.size(), 0.0);
    if (range > 0.0) {
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] - min) / range;
    }
    return g.with_attrs(std::move(out));
}

std::vector<double> degree_activity(const AttributedGraph& g) {
    std::vector<double> out(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) out[i] = static_cast<double>(g.degree(i));
    return out;
}

AttributedGraph trim_top_active(const AttributedGraph& g, std::span<const double> activity,
                                std::size_t max_nodes) {
    if (max_nodes == 0) throw std::invalid_argument("max_nodes must be at least 1");
    if (activity.size() != g.node_count()) {
        throw std::invalid_argument("activity vector does not match node count");
    }
    if (g.node_count() <= max_nodes) return g;
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (activity[a] != activity[b]) return activity[a] > activity[b];
        return g.label(a) < g.label(b);
    });
    order.resize(max_nodes);
    return g.induced(order);
}

DistanceMatrix::DistanceMatrix(std::size_t n)
    : n_(n), d_(n * n, std::numeric_limits<double>::infinity()) {
    for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = 0.0;
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
    if (value < 0.0 || std::isnan(value)) throw std::invalid_argument("negative distance");
    if (i == j && value != 0.0) throw std::invalid_argument("nonzero self distance");
    d_[i * n_ + j] = value;
    d_[j * n_ + i] = value;
}

double DistanceMatrix::max_finite() const {
    double best = 0.0;
    for (double x : d_) {
        if (std::isfinite(x)) best = std::max(best, x);
    }
    return best;
}

DistanceMatrix geodesic_distance_matrix(const AttributedGraph& g) {
    const std::size_t n = g.node_count();
    DistanceMatrix dm(n);
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> hops(n);
    std::queue<NodeId> frontier;
    for (NodeId s = 0; s < n; ++s) {
        std::fill(hops.begin(), hops.end(), unseen);
        hops[s] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const NodeId x = frontier.front();
            frontier.pop();
            for (NodeId y : g.neighbors(x)) {
                if (hops[y] == unseen) {
                    hops[y] = hops[x] + 1;
                    frontier.push(y);
                }
            }
        }
        for (NodeId t = s + 1; t < n; ++t) {
            if (hops[t] != unseen) dm.set(s, t, static_cast<double>(hops[t]));
        }
    }
    return dm;
}

}  // namespace vab
