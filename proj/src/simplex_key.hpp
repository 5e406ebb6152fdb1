#ifndef VAB_SRC_SIMPLEX_KEY_HPP
#define VAB_SRC_SIMPLEX_KEY_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "vab/filtration.hpp"

namespace vab::detail {

// 20 bits per vertex slot plus two dimension bits.
inline std::uint64_t simplex_key(const Simplex& s) {
    constexpr std::uint64_t limit = std::uint64_t{1} << 20;
    std::uint64_t key = static_cast<std::uint64_t>(s.dim);
    for (int i = 0; i <= s.dim; ++i) {
        if (s.vertices[static_cast<std::size_t>(i)] >= limit) {
            throw std::length_error("node id too large for simplex key");
        }
        key = (key << 20) | s.vertices[static_cast<std::size_t>(i)];
    }
    return key;
}

// Codimension-1 faces; only the first dim+1 entries are meaningful.
inline std::array<Simplex, 3> facets(const Simplex& s) {
    const auto& v = s.vertices;
    if (s.dim == 1) return {Simplex::vertex(v[0]), Simplex::vertex(v[1]), Simplex{}};
    return {Simplex{{v[1], v[2], 0}, 1}, Simplex{{v[0], v[2], 0}, 1},
            Simplex{{v[0], v[1], 0}, 1}};
}

}  // namespace vab::detail

#endif  // VAB_SRC_SIMPLEX_KEY_HPP
