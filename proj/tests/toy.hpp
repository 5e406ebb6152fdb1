#ifndef VAB_TESTS_TOY_HPP
#define VAB_TESTS_TOY_HPP

#include <string>
#include <utility>
#include <vector>

#include "vab/graph.hpp"

namespace toy {

// Six nodes, eight edges, attributes (4,2,1,1,3,1) on nodes 1..6.
inline vab::AttributedGraph example_graph() {
    const std::vector<std::pair<std::string, std::string>> edges{
        {"1", "2"}, {"1", "6"}, {"2", "3"}, {"2", "5"}, {"2", "6"}, {"3", "4"}, {"4", "5"}, {"5", "6"}};
    const std::vector<std::pair<std::string, double>> attrs{
        {"1", 4}, {"2", 2}, {"3", 1}, {"4", 1}, {"5", 3}, {"6", 1}};
    return vab::AttributedGraph::build(edges, attrs);
}

inline vab::AttributedGraph indexed(std::size_t n, std::vector<vab::Edge> edges, std::vector<double> attrs = {}) {
    if (attrs.empty()) attrs.assign(n, 0.0);
    return vab::AttributedGraph::from_indexed(n, edges, std::move(attrs));
}

inline vab::AttributedGraph path3() { return indexed(3, {{0, 1}, {1, 2}}); }
inline vab::AttributedGraph k3() { return indexed(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline vab::AttributedGraph star4() { return indexed(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline vab::AttributedGraph cycle(std::size_t n) {
    std::vector<vab::Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<vab::NodeId>(i), b = static_cast<vab::NodeId>((i + 1) % n);
        e.push_back({std::min(a, b), std::max(a, b)});
    }
    return indexed(n, e);
}

}  // namespace toy

#endif
