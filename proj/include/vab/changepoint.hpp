// Energy-statistic divisive change-point estimation for multivariate series.

#ifndef VAB_CHANGEPOINT_HPP
#define VAB_CHANGEPOINT_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace vab {

/// Row-major T x F matrix: one row per time step.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    static SeriesMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Empirical energy divergence between two samples and its scaled form
/// n m / (n + m) * divergence used as the split statistic.
struct EnergyStatistic {
    double divergence = 0.0;
    double scaled = 0.0;
};

/// Throws std::invalid_argument unless 0 < alpha < 2 and both samples are
/// nonempty with matching column counts.
EnergyStatistic energy_divergence(const SeriesMatrix& x, const SeriesMatrix& y, double alpha = 1.0);

struct EDivisiveOptions {
    double alpha = 1.0;
    std::size_t permutations = 199;
    double significance = 0.05;
    std::size_t min_size = 10;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

/// One accepted split, in the order it was found.
struct SplitRecord {
    std::size_t index = 0;          // 1-based first row of the new segment
    double p_value = 1.0;
    double statistic = 0.0;         // scaled energy statistic of the split
    std::size_t segment_begin = 0;  // 1-based first row of the segment that was split
    std::size_t segment_end = 0;    // 1-based last row of that segment
};

struct ChangePointResult {
    std::vector<std::size_t> estimates;  // sorted, 1-based
    std::vector<double> p_values;        // aligned with `estimates`
    std::vector<SplitRecord> order_found;
};

/// Hierarchical binary segmentation. Each round takes the segment whose best
/// split has the largest statistic, tests it against `permutations` shuffles
/// of that segment's rows, and keeps the split when the permutation p-value
/// (1 + #{shuffled >= observed}) / (permutations + 1) is at most
/// `significance`. Stops at the first rejected split. Results depend only on
/// the data and options (never on `threads`).
ChangePointResult e_divisive(const SeriesMatrix& series, const EDivisiveOptions& opts = {});

}  // namespace vab

#endif  // VAB_CHANGEPOINT_HPP
