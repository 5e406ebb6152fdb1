#include "vab/depth.hpp"

#include <stdexcept>

namespace vab {
namespace {

std::size_t choose2(std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace

double modified_band_depth(std::span<const double> target, std::span<const Curve> window,
                           BandMode mode) {
    const std::size_t w = window.size();
    if (w < 2) throw std::invalid_argument("band depth needs a window of at least 2 curves");
    const std::size_t d = target.size();
    for (const Curve& c : window) {
        if (c.size() != d) throw std::invalid_argument("curve length mismatch");
    }
    if (d == 0) throw std::invalid_argument("curves must have at least one coordinate");

    // Per coordinate, count pairs whose band contains x from how many curves
    // lie strictly below and strictly above it.
    std::size_t covered = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const double x = target[i];
        std::size_t below = 0;
        std::size_t above = 0;
        for (const Curve& c : window) {
            if (c[i] < x) ++below;
            if (c[i] > x) ++above;
        }
        std::size_t inside = 0;
        if (mode == BandMode::Open) {
            inside = below * above;
        } else {
            // Every pair except those entirely below or entirely above.
            inside = choose2(w) - choose2(below) - choose2(above);
        }
        covered += inside;
    }
    return static_cast<double>(covered) / static_cast<double>(choose2(w) * d);
}

DepthSeries rolling_depth(std::span<const Curve> series, std::size_t window, BandMode mode) {
    if (window < 2) throw std::invalid_argument("window must be at least 2");
    if (series.size() < window) throw std::invalid_argument("series shorter than the window");
    DepthSeries out{std::vector<std::optional<double>>(series.size()), window};
    for (std::size_t t = window - 1; t < series.size(); ++t) {
        const auto recent = series.subspan(t + 1 - window, window);
        out.values[t] = modified_band_depth(series[t], recent, mode);
    }
    return out;
}

}  // namespace vab
