#include "vab/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vab/parallel.hpp"
#include "vab/random.hpp"

namespace vab {

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("series data size mismatch");
    for (double x : data_) {
        if (!std::isfinite(x)) throw std::invalid_argument("series holds a non-finite value");
    }
}

SeriesMatrix SeriesMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<double> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged series rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return SeriesMatrix(rows.size(), cols, std::move(data));
}

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw std::invalid_argument("alpha must lie in (0, 2)");
}

double powered_distance(std::span<const double> a, std::span<const double> b, double alpha) {
    double sq = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sq += d * d;
    }
    const double dist = std::sqrt(sq);
    return alpha == 1.0 ? dist : std::pow(dist, alpha);
}

double pair_count(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

// Combines the between and within sums into the two energy statistics.
EnergyStatistic combine(double between, double within_x, double within_y, std::size_t n,
                        std::size_t m) {
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    double e = 2.0 * between / (dn * dm);
    if (n > 1) e -= within_x / pair_count(n);
    if (m > 1) e -= within_y / pair_count(m);
    return {e, dn * dm / (dn + dm) * e};
}

struct BestSplit {
    std::size_t offset = 0;  // split position inside the segment
    double statistic = -std::numeric_limits<double>::infinity();
};

// Best split of a segment given its L x L powered-distance matrix in the
// segment's (possibly shuffled) row order. Both sides hold >= min_size rows.
BestSplit scan_segment(const std::vector<double>& m, std::size_t len, std::size_t min_size) {
    BestSplit best;
    if (len < 2 * min_size) return best;
    auto at = [&](std::size_t i, std::size_t j) { return m[i * len + j]; };

    std::size_t tau = min_size;
    double within_left = 0.0;
    double within_right = 0.0;
    double between = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            if (j < tau) {
                within_left += at(i, j);
            } else if (i >= tau) {
                within_right += at(i, j);
            } else {
                between += at(i, j);
            }
        }
    }
    for (;;) {
        const double q = combine(between, within_left, within_right, tau, len - tau).scaled;
        if (q > best.statistic) best = {tau, q};
        if (tau + 1 > len - min_size) break;
        // Row `tau` moves from the right block to the left block.
        double to_left = 0.0;
        double to_right = 0.0;
        for (std::size_t i = 0; i < tau; ++i) to_left += at(tau, i);
        for (std::size_t j = tau + 1; j < len; ++j) to_right += at(tau, j);
        within_left += to_left;
        within_right -= to_right;
        between += to_right - to_left;
        ++tau;
    }
    return best;
}

struct Segment {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive
    BestSplit best;
};

}  // namespace

EnergyStatistic energy_divergence(const SeriesMatrix& x, const SeriesMatrix& y, double alpha) {
    check_alpha(alpha);
    if (x.rows() == 0 || y.rows() == 0) throw std::invalid_argument("samples must be nonempty");
    if (x.cols() != y.cols()) throw std::invalid_argument("samples differ in dimension");
    double between = 0.0;
    double within_x = 0.0;
    double within_y = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < y.rows(); ++j) between += powered_distance(x.row(i), y.row(j), alpha);
        for (std::size_t k = i + 1; k < x.rows(); ++k) within_x += powered_distance(x.row(i), x.row(k), alpha);
    }
    for (std::size_t j = 0; j < y.rows(); ++j) {
        for (std::size_t l = j + 1; l < y.rows(); ++l) within_y += powered_distance(y.row(j), y.row(l), alpha);
    }
    return combine(between, within_x, within_y, x.rows(), y.rows());
}

ChangePointResult e_divisive(const SeriesMatrix& series, const EDivisiveOptions& opts) {
    check_alpha(opts.alpha);
    if (opts.min_size < 1) throw std::invalid_argument("min_size must be at least 1");
    if (opts.permutations < 1) throw std::invalid_argument("need at least one permutation");
    const std::size_t t = series.rows();
    if (t < 2 * opts.min_size) throw std::invalid_argument("series too short for min_size");

    std::vector<double> dist(t * t, 0.0);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            dist[i * t + j] = dist[j * t + i] = powered_distance(series.row(i), series.row(j), opts.alpha);
        }
    }
    auto local_matrix = [&](std::span<const std::size_t> rows) {
        const std::size_t len = rows.size();
        std::vector<double> m(len * len);
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t j = 0; j < len; ++j) m[i * len + j] = dist[rows[i] * t + rows[j]];
        }
        return m;
    };
    auto identity_rows = [](std::size_t begin, std::size_t end) {
        std::vector<std::size_t> rows(end - begin);
        std::iota(rows.begin(), rows.end(), begin);
        return rows;
    };
    auto best_of = [&](std::size_t begin, std::size_t end) {
        return scan_segment(local_matrix(identity_rows(begin, end)), end - begin, opts.min_size);
    };

    std::vector<Segment> segments{{0, t, best_of(0, t)}};
    ChangePointResult result;
    for (std::uint64_t round = 0;; ++round) {
        auto pick = segments.end();
        for (auto it = segments.begin(); it != segments.end(); ++it) {
            if (it->end - it->begin < 2 * opts.min_size) continue;
            if (pick == segments.end() || it->best.statistic > pick->best.statistic) pick = it;
        }
        if (pick == segments.end()) break;

        const Segment seg = *pick;
        const double observed = seg.best.statistic;
        std::vector<char> exceeds(opts.permutations, 0);
        parallel_for(opts.permutations, opts.threads, [&](std::size_t r) {
            std::mt19937_64 rng(derive_seed(opts.seed, round, r));
            auto rows = identity_rows(seg.begin, seg.end);
            shuffle(std::span<std::size_t>(rows), rng);
            const auto shuffled = scan_segment(local_matrix(rows), rows.size(), opts.min_size);
            exceeds[r] = shuffled.statistic >= observed ? 1 : 0;
        });
        const auto count = static_cast<double>(std::count(exceeds.begin(), exceeds.end(), 1));
        const double p_value = (1.0 + count) / (static_cast<double>(opts.permutations) + 1.0);
        if (p_value > opts.significance) break;

        const std::size_t cut = seg.begin + seg.best.offset;
        result.order_found.push_back({cut + 1, p_value, observed, seg.begin + 1, seg.end});
        *pick = {seg.begin, cut, best_of(seg.begin, cut)};
        segments.push_back({cut, seg.end, best_of(cut, seg.end)});
    }

    std::vector<SplitRecord> sorted = result.order_found;
    std::sort(sorted.begin(), sorted.end(),
              [](const SplitRecord& a, const SplitRecord& b) { return a.index < b.index; });
    for (const auto& s : sorted) {
        result.estimates.push_back(s.index);
        result.p_values.push_back(s.p_value);
    }
    return result;
}

}  // namespace vab
