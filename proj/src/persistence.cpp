#include "vab/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "simplex_key.hpp"

namespace vab {

PersistenceDiagram PersistenceDiagram::from_pairs(
    int dim, std::initializer_list<std::pair<double, double>> pairs) {
    return from_pairs(dim, std::vector<std::pair<double, double>>(pairs));
}

PersistenceDiagram PersistenceDiagram::from_pairs(
    int dim, const std::vector<std::pair<double, double>>& pairs) {
    PersistenceDiagram pd;
    bool first = true;
    for (const auto& [b, d] : pairs) {
        if (!std::isfinite(b) || std::isnan(d) || d < b) {
            throw std::invalid_argument("persistence pair needs finite birth <= death");
        }
        pd.points.push_back({dim, b, d});
        const double hi = std::isfinite(d) ? d : b;
        pd.min_value = first ? b : std::min(pd.min_value, b);
        pd.max_value = first ? hi : std::max(pd.max_value, hi);
        first = false;
    }
    return pd;
}

PersistenceDiagram PersistenceDiagram::slice(int dim) const {
    PersistenceDiagram out{{}, min_value, max_value};
    std::copy_if(points.begin(), points.end(), std::back_inserter(out.points),
                 [dim](const PersistencePoint& p) { return p.dim == dim; });
    return out;
}

bool PersistenceDiagram::has_essential() const {
    return std::any_of(points.begin(), points.end(),
                       [](const PersistencePoint& p) { return p.essential(); });
}

void PersistenceDiagram::canonicalize() {
    std::sort(points.begin(), points.end(), [](const PersistencePoint& a, const PersistencePoint& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
}

namespace {

using Column = std::vector<std::uint32_t>;

void add_into(Column& target, const Column& source, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

void emit(PersistenceDiagram& pd, int dim, double birth, double death,
          const PersistenceOptions& opts) {
    if (birth == death && !opts.keep_zero_persistence) return;
    pd.points.push_back({dim, birth, death});
}

}  // namespace

PersistenceDiagram compute_persistence(const Filtration& f, const PersistenceOptions& opts) {
    if (auto why = f.monotonicity_violation()) {
        throw std::invalid_argument("filtration is not monotone: " + *why);
    }
    const auto entries = f.entries();
    const std::size_t n = entries.size();

    std::unordered_map<std::uint64_t, std::uint32_t> position;
    position.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        position.emplace(detail::simplex_key(entries[i].simplex), static_cast<std::uint32_t>(i));
    }
    auto boundary = [&](const Simplex& s) {
        Column col;
        const auto faces = detail::facets(s);
        for (int k = 0; k <= s.dim; ++k) {
            col.push_back(position.at(detail::simplex_key(faces[static_cast<std::size_t>(k)])));
        }
        std::sort(col.begin(), col.end());
        return col;
    };

    constexpr std::uint32_t none = UINT32_MAX;
    // pivot_owner[row] = column whose reduced low is `row`.
    std::vector<std::uint32_t> pivot_owner(n, none);
    std::vector<bool> negative(n, false);
    std::vector<Column> reduced(n);
    Column scratch;

    auto reduce = [&](std::uint32_t j) {
        Column col = boundary(entries[j].simplex);
        while (!col.empty() && pivot_owner[col.back()] != none) {
            add_into(col, reduced[pivot_owner[col.back()]], scratch);
        }
        if (!col.empty()) {
            pivot_owner[col.back()] = j;
            negative[j] = true;
            reduced[j] = std::move(col);
        }
    };

    // Triangles first; every edge that becomes a triangle pivot is a creator,
    // so its own column reduces to zero and can be skipped.
    for (std::uint32_t j = 0; j < n; ++j) {
        if (entries[j].simplex.dim == 2) reduce(j);
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        if (entries[j].simplex.dim == 1 && pivot_owner[j] == none) reduce(j);
    }

    PersistenceDiagram pd;
    pd.min_value = f.min_value();
    pd.max_value = f.max_value();
    for (std::uint32_t i = 0; i < n; ++i) {
        const int dim = entries[i].simplex.dim;
        if (dim > 1 || negative[i]) continue;
        const double birth = entries[i].value;
        const double death = pivot_owner[i] == none ? kInfinity : entries[pivot_owner[i]].value;
        emit(pd, dim, birth, death, opts);
    }
    pd.canonicalize();
    return pd;
}

PersistenceDiagram h0_union_find(const Filtration& f, const PersistenceOptions& opts) {
    const auto entries = f.entries();
    constexpr std::uint32_t none = UINT32_MAX;

    NodeId max_vertex = 0;
    for (const auto& e : entries) {
        for (NodeId v : e.simplex.span()) max_vertex = std::max(max_vertex, v);
    }
    const std::size_t slots = entries.empty() ? 0 : max_vertex + 1;
    std::vector<std::uint32_t> parent(slots, none);
    std::vector<std::uint32_t> created_at(slots, none);  // filtration position of a root

    auto find = [&](std::uint32_t x) {
        std::uint32_t root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) x = std::exchange(parent[x], root);
        return root;
    };

    PersistenceDiagram pd;
    pd.min_value = f.min_value();
    pd.max_value = f.max_value();
    for (std::uint32_t i = 0; i < entries.size(); ++i) {
        const Simplex& s = entries[i].simplex;
        if (s.dim == 0) {
            parent[s.vertices[0]] = s.vertices[0];
            created_at[s.vertices[0]] = i;
        } else if (s.dim == 1) {
            const NodeId a = s.vertices[0];
            const NodeId b = s.vertices[1];
            if (parent[a] == none || parent[b] == none) {
                throw std::invalid_argument("filtration is not monotone: edge before its vertex");
            }
            std::uint32_t ra = find(a);
            std::uint32_t rb = find(b);
            if (ra == rb) continue;
            if (created_at[ra] > created_at[rb]) std::swap(ra, rb);
            // rb is the younger component and dies here.
            emit(pd, 0, entries[created_at[rb]].value, entries[i].value, opts);
            parent[rb] = ra;
        }
    }
    for (std::uint32_t v = 0; v < slots; ++v) {
        if (parent[v] == v) emit(pd, 0, entries[created_at[v]].value, kInfinity, opts);
    }
    pd.canonicalize();
    return pd;
}

PersistenceDiagram resolve_infinite(const PersistenceDiagram& pd, InfinitePolicy policy) {
    PersistenceDiagram out{{}, pd.min_value, pd.max_value};
    out.points.reserve(pd.points.size());
    for (const PersistencePoint& p : pd.points) {
        if (!p.essential()) {
            out.points.push_back(p);
        } else if (policy.replaces()) {
            if (policy.value() < p.birth) {
                throw std::invalid_argument("replacement death lies below an essential birth");
            }
            out.points.push_back({p.dim, p.birth, policy.value()});
        }
    }
    if (policy.replaces()) out.canonicalize();
    return out;
}

}  // namespace vab
