#include "vab/graph_stats.hpp"

#include <algorithm>
#include <vector>

namespace vab {
namespace {

std::uint64_t choose2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

std::uint64_t connected_triples(const AttributedGraph& g) {
    std::uint64_t total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) total += choose2(g.degree(v));
    return total;
}

}  // namespace

MotifCounts motif_counts_3(const AttributedGraph& g) {
    const auto triangles = static_cast<std::uint64_t>(enumerate_triangles(g).size());
    return {connected_triples(g) - 3 * triangles, triangles};
}

std::optional<double> global_clustering(const AttributedGraph& g) {
    const std::uint64_t triples = connected_triples(g);
    if (triples == 0) return std::nullopt;
    const auto triangles = static_cast<double>(enumerate_triangles(g).size());
    return 3.0 * triangles / static_cast<double>(triples);
}

std::optional<double> degree_assortativity(const AttributedGraph& g) {
    const auto edges = g.edges();
    if (edges.empty()) return std::nullopt;
    const std::size_t first = g.degree(edges.front().u);
    const bool constant = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return g.degree(e.u) == first && g.degree(e.v) == first;
    });
    if (constant) return std::nullopt;

    // Both orientations: x and y range over the same multiset, so they share
    // mean and variance.
    const double count = 2.0 * static_cast<double>(edges.size());
    double sum = 0.0;
    for (const Edge& e : edges) sum += static_cast<double>(g.degree(e.u) + g.degree(e.v));
    const double mean = sum / count;
    double var = 0.0;
    double cov = 0.0;
    for (const Edge& e : edges) {
        const double a = static_cast<double>(g.degree(e.u)) - mean;
        const double b = static_cast<double>(g.degree(e.v)) - mean;
        var += a * a + b * b;
        cov += 2.0 * a * b;
    }
    return cov / var;
}

std::optional<double> degree_centralization(const AttributedGraph& g) {
    const std::size_t n = g.node_count();
    if (n < 3) return std::nullopt;
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    std::uint64_t gap = 0;
    for (NodeId v = 0; v < n; ++v) gap += max_degree - g.degree(v);
    return static_cast<double>(gap) / static_cast<double>((n - 1) * (n - 2));
}

double average_local_clustering(const AttributedGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return 0.0;
    std::vector<std::uint64_t> corners(n, 0);
    for (const Triangle& t : enumerate_triangles(g)) {
        for (NodeId v : t) ++corners[v];
    }
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const std::uint64_t pairs = choose2(g.degree(v));
        if (pairs > 0) total += static_cast<double>(corners[v]) / static_cast<double>(pairs);
    }
    return total / static_cast<double>(n);
}

GraphSummary summarize(const AttributedGraph& g) {
    return {g.edge_count(), global_clustering(g), degree_assortativity(g),
            degree_centralization(g)};
}

}  // namespace vab
