// Betti functions of persistence diagrams and their vectorizations.
//
// A Betti function sum_{(b,d)} w(b,d) * 1[b <= t < d] is stored exactly as a
// right-continuous step function, so evaluation, cell averages and L1
// distances are computed in closed form without sampling.

#ifndef VAB_BETTI_HPP
#define VAB_BETTI_HPP

#include <functional>
#include <span>
#include <vector>

#include "vab/persistence.hpp"

namespace vab {

/// Weight attached to each interval [b, d). Carries the sup-norms of the
/// weight and of its gradient over the region the diagrams live in, which
/// is what the stability bound consumes.
class WeightFunction {
public:
    /// w = 1.
    static WeightFunction constant_one();

    /// w(b, d) = d - b for diagrams whose points satisfy d - b <= max_persistence.
    static WeightFunction linear_persistence(double max_persistence);

    /// Any bounded differentiable weight with caller-reported sup-norms.
    static WeightFunction custom(std::function<double(double, double)> fn, double sup_norm,
                                 double gradient_sup_norm);

    double operator()(double birth, double death) const { return fn_(birth, death); }
    double sup_norm() const { return sup_; }
    double gradient_sup_norm() const { return grad_sup_; }
    bool is_constant_one() const { return constant_one_; }

    /// sup|w| + L * sup|grad w|, the Lipschitz factor relating the L1
    /// distance of Betti functions to the L1 1-Wasserstein distance.
    double stability_factor(double max_persistence) const {
        return sup_ + max_persistence * grad_sup_;
    }

private:
    WeightFunction(std::function<double(double, double)> fn, double sup, double grad_sup,
                   bool constant_one);

    std::function<double(double, double)> fn_;
    double sup_;
    double grad_sup_;
    bool constant_one_;
};

/// Piecewise-constant function: `values[k]` on [breaks[k], breaks[k+1]),
/// zero outside [breaks.front(), breaks.back()). Adjacent pieces always
/// differ in value and the outer pieces are nonzero.
class BettiFunction {
public:
    BettiFunction() = default;
    BettiFunction(std::vector<double> breaks, std::vector<double> values);

    std::span<const double> breaks() const { return breaks_; }
    std::span<const double> values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    double operator()(double t) const;

    /// Exact integral over [lo, hi).
    double integral(double lo, double hi) const;

    friend bool operator==(const BettiFunction&, const BettiFunction&) = default;

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

/// Betti function of the dimension-`dim` points of `pd`. Throws
/// std::invalid_argument if any of those points has an infinite death.
BettiFunction betti_function(const PersistenceDiagram& pd, int dim,
                             const WeightFunction& w = WeightFunction::constant_one());

/// Betti function of all points of `pd` regardless of dimension.
BettiFunction betti_function(const PersistenceDiagram& pd,
                             const WeightFunction& w = WeightFunction::constant_one());

inline double eval(const BettiFunction& bf, double t) { return bf(t); }

/// `count` equally spaced points from `lo` to `hi` inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

/// Pointwise vectorization (bf(t_1), ..., bf(t_d)).
std::vector<double> vectorize_common(const BettiFunction& bf, std::span<const double> grid);

/// Vector of averaged Bettis: cell averages of a Betti function on a grid.
struct VAB {
    std::vector<double> values;  // one per cell, grid.size() - 1 entries
    std::vector<double> grid;
};

/// Entry k is the exact mean of `bf` over [t_k, t_{k+1}).
VAB vectorize_averaged(const BettiFunction& bf, std::span<const double> grid);

/// Exact L1 norm of bf1 - bf2.
double l1_distance(const BettiFunction& bf1, const BettiFunction& bf2);

}  // namespace vab

#endif  // VAB_BETTI_HPP
