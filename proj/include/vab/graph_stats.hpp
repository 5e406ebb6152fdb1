// Classical (non-topological) graph summaries.

#ifndef VAB_GRAPH_STATS_HPP
#define VAB_GRAPH_STATS_HPP

#include <cstdint>
#include <optional>

#include "vab/graph.hpp"

namespace vab {

/// Connected 3-node subgraph counts. `wedges` counts 2-paths that do not
/// close into a triangle.
struct MotifCounts {
    std::uint64_t wedges = 0;
    std::uint64_t triangles = 0;
};

/// Edge count, transitivity, degree assortativity and Freeman degree
/// centralization. Absent values mean the statistic is undefined for the graph.
struct GraphSummary {
    std::uint64_t edge_count = 0;
    std::optional<double> clustering;
    std::optional<double> assortativity;
    std::optional<double> centralization;
};

MotifCounts motif_counts_3(const AttributedGraph& g);

/// 3 * triangles / connected triples; undefined when there is no 2-path.
std::optional<double> global_clustering(const AttributedGraph& g);

/// Pearson correlation of degrees over both orientations of every edge;
/// undefined when all edge endpoints share one degree (or there are no edges).
std::optional<double> degree_assortativity(const AttributedGraph& g);

/// sum_v (deg_max - deg_v) / ((n-1)(n-2)); undefined for n < 3.
std::optional<double> degree_centralization(const AttributedGraph& g);

/// Mean over nodes of the local clustering coefficient, with nodes of
/// degree < 2 contributing 0. Returns 0 for the empty graph.
double average_local_clustering(const AttributedGraph& g);

GraphSummary summarize(const AttributedGraph& g);

}  // namespace vab

#endif  // VAB_GRAPH_STATS_HPP
