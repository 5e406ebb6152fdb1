#include "vab/betti.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vab {

WeightFunction::WeightFunction(std::function<double(double, double)> fn, double sup,
                               double grad_sup, bool constant_one)
    : fn_(std::move(fn)), sup_(sup), grad_sup_(grad_sup), constant_one_(constant_one) {
    if (!fn_) throw std::invalid_argument("weight function is empty");
    if (!std::isfinite(sup_) || !std::isfinite(grad_sup_) || sup_ < 0.0 || grad_sup_ < 0.0) {
        throw std::invalid_argument("weight sup-norms must be finite and nonnegative");
    }
}

WeightFunction WeightFunction::constant_one() {
    return WeightFunction([](double, double) { return 1.0; }, 1.0, 0.0, true);
}

WeightFunction WeightFunction::linear_persistence(double max_persistence) {
    // grad (d - b) = (-1, 1)
    return WeightFunction([](double b, double d) { return d - b; }, max_persistence,
                          std::sqrt(2.0), false);
}

WeightFunction WeightFunction::custom(std::function<double(double, double)> fn, double sup_norm,
                                      double gradient_sup_norm) {
    return WeightFunction(std::move(fn), sup_norm, gradient_sup_norm, false);
}

BettiFunction::BettiFunction(std::vector<double> breaks, std::vector<double> values) {
    if (breaks.empty() && values.empty()) return;
    if (breaks.size() != values.size() + 1) {
        throw std::invalid_argument("step function needs one more break than values");
    }
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        if (!(breaks[k] < breaks[k + 1])) {
            throw std::invalid_argument("step function breaks must increase strictly");
        }
    }
    // Merge equal neighbours and strip zero pieces at both ends.
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!values_.empty() && values_.back() == values[k]) {
            breaks_.back() = breaks[k + 1];
            continue;
        }
        if (values_.empty()) {
            if (values[k] == 0.0) continue;
            breaks_.push_back(breaks[k]);
        }
        values_.push_back(values[k]);
        breaks_.push_back(breaks[k + 1]);
    }
    while (!values_.empty() && values_.back() == 0.0) {
        values_.pop_back();
        breaks_.pop_back();
    }
    if (values_.empty()) breaks_.clear();
}

double BettiFunction::operator()(double t) const {
    if (values_.empty() || t < breaks_.front() || t >= breaks_.back()) return 0.0;
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

double BettiFunction::integral(double lo, double hi) const {
    if (!(lo < hi) || values_.empty()) return 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const double a = std::max(lo, breaks_[k]);
        const double b = std::min(hi, breaks_[k + 1]);
        if (a < b) total += values_[k] * (b - a);
    }
    return total;
}

namespace {

BettiFunction build(const PersistenceDiagram& pd, const WeightFunction& w, const int* dim) {
    struct Interval {
        double birth, death, weight;
    };
    std::vector<Interval> intervals;
    std::vector<double> breaks;
    for (const PersistencePoint& p : pd.points) {
        if (dim && p.dim != *dim) continue;
        if (p.essential()) {
            throw std::invalid_argument(
                "Betti function needs finite deaths; resolve infinite points first");
        }
        if (!(p.birth < p.death)) continue;  // diagonal points contribute nothing
        intervals.push_back({p.birth, p.death, w(p.birth, p.death)});
        breaks.push_back(p.birth);
        breaks.push_back(p.death);
    }
    if (intervals.empty()) return {};
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    // Each piece value is summed afresh (no running deltas), so every piece
    // is exactly the sum of the weights covering it.
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.birth < b.birth; });
    std::vector<double> values(breaks.size() - 1, 0.0);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double t = breaks[k];
        double sum = 0.0;
        for (const Interval& iv : intervals) {
            if (iv.birth > t) break;
            if (t < iv.death) sum += iv.weight;
        }
        values[k] = sum;
    }
    return BettiFunction(std::move(breaks), std::move(values));
}

void check_grid(std::span<const double> grid) {
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        if (!(grid[k] < grid[k + 1])) throw std::invalid_argument("grid must increase strictly");
    }
}

}  // namespace

BettiFunction betti_function(const PersistenceDiagram& pd, int dim, const WeightFunction& w) {
    return build(pd, w, &dim);
}

BettiFunction betti_function(const PersistenceDiagram& pd, const WeightFunction& w) {
    return build(pd, w, nullptr);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    if (count < 2) throw std::invalid_argument("grid needs at least two points");
    if (!(lo < hi)) throw std::invalid_argument("grid range must be increasing");
    std::vector<double> grid(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) grid[k] = lo + step * static_cast<double>(k);
    grid.back() = hi;
    return grid;
}

std::vector<double> vectorize_common(const BettiFunction& bf, std::span<const double> grid) {
    check_grid(grid);
    std::vector<double> out(grid.size());
    std::transform(grid.begin(), grid.end(), out.begin(), [&](double t) { return bf(t); });
    return out;
}

VAB vectorize_averaged(const BettiFunction& bf, std::span<const double> grid) {
    check_grid(grid);
    if (grid.size() < 2) throw std::invalid_argument("grid needs at least two points");
    VAB out{std::vector<double>(grid.size() - 1), std::vector<double>(grid.begin(), grid.end())};
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        out.values[k] = bf.integral(grid[k], grid[k + 1]) / (grid[k + 1] - grid[k]);
    }
    return out;
}

double l1_distance(const BettiFunction& bf1, const BettiFunction& bf2) {
    std::vector<double> merged;
    std::merge(bf1.breaks().begin(), bf1.breaks().end(), bf2.breaks().begin(), bf2.breaks().end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        const double t = merged[k];
        total += std::abs(bf1(t) - bf2(t)) * (merged[k + 1] - t);
    }
    return total;
}

}  // namespace vab
