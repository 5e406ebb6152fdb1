// Modified band depth of a curve within a window of curves, and the rolling
// depth score built on it.

#ifndef VAB_DEPTH_HPP
#define VAB_DEPTH_HPP

#include <optional>
#include <span>
#include <vector>

namespace vab {

/// Whether a band [min, max] includes its boundary.
enum class BandMode { Closed, Open };

using Curve = std::vector<double>;

/// Average over all curve pairs of the window of the fraction of coordinates
/// at which `target` lies inside the pair's band. Throws
/// std::invalid_argument on a length mismatch or a window of fewer than 2 curves.
double modified_band_depth(std::span<const double> target, std::span<const Curve> window,
                           BandMode mode = BandMode::Closed);

/// Depth over time; entries before the first full window are absent.
struct DepthSeries {
    std::vector<std::optional<double>> values;
    std::size_t window = 0;
};

/// Depth of curve t within curves t-w+1..t (itself included), for every t
/// with a full window. Throws std::invalid_argument if the series is shorter
/// than `window` or `window` < 2.
DepthSeries rolling_depth(std::span<const Curve> series, std::size_t window,
                          BandMode mode = BandMode::Closed);

}  // namespace vab

#endif  // VAB_DEPTH_HPP
