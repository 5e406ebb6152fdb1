#include "vab/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "simplex_key.hpp"

namespace vab {

Simplex Simplex::edge(NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("degenerate edge");
    if (a > b) std::swap(a, b);
    return {{a, b, 0}, 1};
}

Simplex Simplex::triangle(NodeId a, NodeId b, NodeId c) {
    std::array<NodeId, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) throw std::invalid_argument("degenerate triangle");
    return {v, 2};
}

bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.dim != b.simplex.dim) return a.simplex.dim < b.simplex.dim;
    return a.simplex.vertices < b.simplex.vertices;
}

Filtration::Filtration(std::vector<FiltrationEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (std::isnan(e.value)) throw std::invalid_argument("NaN filtration value");
    }
    std::sort(entries_.begin(), entries_.end(), filtration_less);
}

double Filtration::min_value() const { return entries_.empty() ? 0.0 : entries_.front().value; }
double Filtration::max_value() const { return entries_.empty() ? 0.0 : entries_.back().value; }

std::optional<std::string> Filtration::monotonicity_violation() const {
    std::unordered_map<std::uint64_t, std::size_t> position;
    position.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Simplex& s = entries_[i].simplex;
        if (!position.emplace(detail::simplex_key(s), i).second) {
            return "simplex listed twice at position " + std::to_string(i);
        }
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Simplex& s = entries_[i].simplex;
        if (s.dim == 0) continue;
        const auto faces = detail::facets(s);
        for (int f = 0; f <= s.dim; ++f) {
            const auto it = position.find(detail::simplex_key(faces[static_cast<std::size_t>(f)]));
            if (it == position.end()) {
                return "simplex at position " + std::to_string(i) + " has a missing face";
            }
            if (it->second > i) {
                return "simplex at position " + std::to_string(i) +
                       " enters before one of its faces";
            }
        }
    }
    return std::nullopt;
}

Filtration lower_star_filtration(const AttributedGraph& g) {
    std::vector<FiltrationEntry> out;
    const auto a = g.attrs();
    const auto triangles = enumerate_triangles(g);
    out.reserve(g.node_count() + g.edge_count() + triangles.size());
    for (NodeId v = 0; v < g.node_count(); ++v) out.push_back({Simplex::vertex(v), a[v]});
    for (const Edge& e : g.edges()) {
        out.push_back({Simplex::edge(e.u, e.v), std::max(a[e.u], a[e.v])});
    }
    for (const Triangle& t : triangles) {
        out.push_back({Simplex{t, 2}, std::max({a[t[0]], a[t[1]], a[t[2]]})});
    }
    return Filtration(std::move(out));
}

Filtration vietoris_rips_filtration(const DistanceMatrix& dm, double t_max) {
    if (!(t_max >= 0.0)) throw std::invalid_argument("t_max must be nonnegative");
    const std::size_t n = dm.size();
    std::vector<FiltrationEntry> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({Simplex::vertex(static_cast<NodeId>(i)), 0.0});
    }
    auto admitted = [&](std::size_t i, std::size_t j) {
        return std::isfinite(dm(i, j)) && dm(i, j) <= t_max;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!admitted(i, j)) continue;
            out.push_back({Simplex::edge(static_cast<NodeId>(i), static_cast<NodeId>(j)), dm(i, j)});
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!admitted(i, k) || !admitted(j, k)) continue;
                out.push_back({Simplex::triangle(static_cast<NodeId>(i), static_cast<NodeId>(j),
                                                 static_cast<NodeId>(k)),
                               std::max({dm(i, j), dm(i, k), dm(j, k)})});
            }
        }
    }
    return Filtration(std::move(out));
}

Filtration vietoris_rips_filtration(const DistanceMatrix& dm) {
    return vietoris_rips_filtration(dm, dm.max_finite());
}

}  // namespace vab
