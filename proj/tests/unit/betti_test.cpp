#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "vab/betti.hpp"
#include "vab/metrics.hpp"

using vab::BettiFunction;
using vab::PersistenceDiagram;

namespace {

PersistenceDiagram example_d1() { return PersistenceDiagram::from_pairs(0, {{1, 2}, {2, 3}, {3, 3.2}}); }
PersistenceDiagram example_d2() { return PersistenceDiagram::from_pairs(0, {{0.9, 1.9}, {1.8, 3.3}}); }

double l1(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

// Points on a 1e-3 lattice so that distinct breakpoints are well separated.
PersistenceDiagram lattice_diagram(oracle::Rng& rng, std::size_t max_points) {
    const std::size_t n = oracle::below(rng, max_points + 1);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t b = oracle::below(rng, 1001), d = oracle::below(rng, 1001);
        if (b > d) std::swap(b, d);
        pts.emplace_back(static_cast<double>(b) * 1e-3, static_cast<double>(d) * 1e-3);
    }
    return PersistenceDiagram::from_pairs(oracle::below(rng, 2), pts);
}

}  // namespace

TEST_CASE("betti_function: examples") {
    const auto b1 = vab::betti_function(example_d1(), 0);
    CHECK(b1 == BettiFunction({1, 3.2}, {1}));
    CHECK(vab::betti_function(PersistenceDiagram{}, 0).is_zero());
    const auto doubled = vab::betti_function(PersistenceDiagram::from_pairs(0, {{0, 2}, {0, 2}}), 0);
    CHECK(doubled == BettiFunction({0, 2}, {2}));
    CHECK_THROWS_AS(vab::betti_function(PersistenceDiagram::from_pairs(0, {{0, vab::kInfinity}}), 0),
                    std::invalid_argument);
}

TEST_CASE("eval is right-continuous") {
    const auto b1 = vab::betti_function(example_d1(), 0);
    CHECK(vab::eval(b1, 1.0) == 1.0);
    CHECK(vab::eval(b1, 3.2) == 0.0);
    CHECK(vab::eval(b1, 0.999) == 0.0);
    CHECK(vab::eval(vab::betti_function(example_d2(), 0), 1.85) == 2.0);
}

TEST_CASE("vectorize_common: examples") {
    const auto b1 = vab::betti_function(example_d1(), 0);
    const std::vector<double> grid{0, 1, 2, 3, 4};
    CHECK(vab::vectorize_common(b1, grid) == std::vector<double>{0, 1, 1, 1, 0});
    CHECK(vab::vectorize_common(BettiFunction{}, grid) == std::vector<double>(5, 0.0));
    const std::vector<double> one{1.85};
    CHECK(vab::vectorize_common(vab::betti_function(example_d2(), 0), one) == std::vector<double>{2});
    const std::vector<double> bad{0, 1, 1};
    CHECK_THROWS_AS(vab::vectorize_common(b1, bad), std::invalid_argument);
}

TEST_CASE("vectorize_averaged: examples") {
    const auto b1 = vab::betti_function(example_d1(), 0);
    const std::vector<double> g1{0, 2, 4};
    const auto v = vab::vectorize_averaged(b1, g1);
    REQUIRE(v.values.size() == 2);
    CHECK(v.values[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v.values[1] == doctest::Approx(0.6).epsilon(1e-15));
    const std::vector<double> g2{0, 0.5, 1};
    CHECK(vab::vectorize_averaged(BettiFunction({0, 1}, {1}), g2).values == std::vector<double>{1, 1});
    CHECK(vab::vectorize_averaged(BettiFunction{}, g1).values == std::vector<double>{0, 0});
    const std::vector<double> bad{0, 2, 1};
    CHECK_THROWS_AS(vab::vectorize_averaged(b1, bad), std::invalid_argument);
}

TEST_CASE("l1_distance: examples") {
    const auto b1 = vab::betti_function(example_d1(), 0);
    const auto b2 = vab::betti_function(example_d2(), 0);
    CHECK(std::abs(vab::l1_distance(b1, b2) - 0.3) <= 1e-12);
    CHECK(vab::l1_distance(b1, b1) == 0.0);
    CHECK(vab::l1_distance(BettiFunction({0, 1}, {1}), BettiFunction({0, 2}, {1})) == 1.0);
}

TEST_CASE("uniform_grid") {
    const auto g = vab::uniform_grid(0, 1, 5);
    CHECK(g == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK(vab::uniform_grid(0, 1, 100).back() == 1.0);
    CHECK_THROWS_AS(vab::uniform_grid(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(vab::uniform_grid(1, 1, 3), std::invalid_argument);
}

TEST_CASE("betti_function agrees with direct evaluation from the diagram") {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pd = oracle::random_diagram(rng, 15, 0);
        const auto bf = vab::betti_function(pd, 0);
        for (int k = 0; k < 50; ++k) {
            const double t = oracle::unit(rng) * 1.2 - 0.1;
            CHECK(bf(t) == oracle::betti_at(pd, 0, t));
        }
        for (const auto& p : pd.points) {
            CHECK(bf(p.birth) == oracle::betti_at(pd, 0, p.birth));
            CHECK(bf(p.death) == oracle::betti_at(pd, 0, p.death));
        }
    }
}

TEST_CASE("VAB equals numeric quadrature of the Betti function") {
    oracle::Rng rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pd = lattice_diagram(rng, 12);
        const int dim = pd.points.empty() ? 0 : pd.points.front().dim;
        const auto bf = vab::betti_function(pd, dim);
        const auto grid = vab::uniform_grid(0.0, 1.0, 2 + oracle::below(rng, 40));
        const auto vab_ = vab::vectorize_averaged(bf, grid);
        for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
            const double area = oracle::step_integral([&](double t) { return oracle::betti_at(pd, dim, t); },
                                                      grid[k], grid[k + 1]);
            CHECK(std::abs(vab_.values[k] - area / (grid[k + 1] - grid[k])) <= 1e-9);
        }
    }
}

TEST_CASE("each VAB entry lies between the extremes of the function on its cell") {
    oracle::Rng rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pd = oracle::random_diagram(rng, 10, 1);
        const auto bf = vab::betti_function(pd, 1);
        const auto grid = vab::uniform_grid(0, 1, 2 + oracle::below(rng, 20));
        const auto v = vab::vectorize_averaged(bf, grid);
        CHECK(v.values.size() == grid.size() - 1);
        for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
            double lo = bf(grid[k]), hi = lo;
            for (double t : bf.breaks()) {
                if (t > grid[k] && t < grid[k + 1]) {
                    lo = std::min(lo, bf(t));
                    hi = std::max(hi, bf(t));
                }
            }
            CHECK(v.values[k] >= lo - 1e-12);
            CHECK(v.values[k] <= hi + 1e-12);
        }
    }
}

TEST_CASE("stability: Betti L1 and VAB L1 are bounded by the 1-Wasserstein distance") {
    oracle::Rng rng(64);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = oracle::random_diagram(rng, 20);
        const auto b = oracle::random_diagram(rng, 20);
        const double w11 = vab::wasserstein(a, b).cost;
        const auto ba = vab::betti_function(a, 0), bb = vab::betti_function(b, 0);
        CHECK(vab::l1_distance(ba, bb) <= w11 + 1e-9);
        for (std::size_t d : {5u, 20u, 100u}) {
            const auto grid = vab::uniform_grid(0, 1, d);
            const double dt = grid[1] - grid[0];
            const double lhs = l1(vab::vectorize_averaged(ba, grid).values, vab::vectorize_averaged(bb, grid).values);
            CHECK(lhs <= w11 / dt + 1e-9);
        }
    }
}

TEST_CASE("weighted stability with persistence weights") {
    oracle::Rng rng(65);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = oracle::random_diagram(rng, 20);
        const auto b = oracle::random_diagram(rng, 20);
        double max_pers = 0.0;
        for (const auto* pd : {&a, &b})
            for (const auto& p : pd->points) max_pers = std::max(max_pers, p.persistence());
        const auto w = vab::WeightFunction::linear_persistence(max_pers);
        const double lhs = vab::l1_distance(vab::betti_function(a, 0, w), vab::betti_function(b, 0, w));
        CHECK(lhs <= w.stability_factor(max_pers) * vab::wasserstein(a, b).cost + 1e-9);
    }
}

TEST_CASE("grid refinement: block averages of the finer VAB give the coarser one") {
    oracle::Rng rng(66);
    for (int trial = 0; trial < 200; ++trial) {
        const auto bf = vab::betti_function(oracle::random_diagram(rng, 15), 0);
        const std::size_t d = 2 + oracle::below(rng, 50);
        const auto coarse = vab::vectorize_averaged(bf, vab::uniform_grid(0, 1, d)).values;
        const auto fine = vab::vectorize_averaged(bf, vab::uniform_grid(0, 1, 2 * d - 1)).values;
        REQUIRE(fine.size() == 2 * coarse.size());
        for (std::size_t k = 0; k < coarse.size(); ++k) {
            CHECK(std::abs(coarse[k] - 0.5 * (fine[2 * k] + fine[2 * k + 1])) <= 1e-12);
        }
    }
}

TEST_CASE("diagonal points do not change the Betti function") {
    oracle::Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        auto pd = oracle::random_diagram(rng, 10);
        const auto before = vab::betti_function(pd, 0);
        for (int k = 0; k < 3; ++k) {
            const double a = oracle::unit(rng);
            pd.points.push_back({0, a, a});
        }
        CHECK(vab::betti_function(pd, 0) == before);
    }
}

TEST_CASE("BettiFunction normalizes its representation") {
    const BettiFunction f({0, 1, 2, 3, 4}, {0, 1, 1, 0});
    CHECK(f == BettiFunction({1, 3}, {1}));
    CHECK(f.integral(0, 10) == 2.0);
    CHECK(f.integral(1.5, 2.5) == 1.0);
    CHECK_THROWS_AS(BettiFunction({0, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(BettiFunction({1, 0}, {1}), std::invalid_argument);
}

TEST_CASE("weight functions report their norms") {
    const auto one = vab::WeightFunction::constant_one();
    CHECK(one.is_constant_one());
    CHECK(one.stability_factor(5.0) == 1.0);
    const auto lin = vab::WeightFunction::linear_persistence(0.5);
    CHECK(lin(0.25, 0.75) == 0.5);
    CHECK(lin.sup_norm() == 0.5);
    const auto custom = vab::WeightFunction::custom([](double b, double d) { return d * d - b; }, 1.0, 2.0);
    CHECK(custom(0, 1) == 1.0);
    CHECK_THROWS_AS(vab::WeightFunction::custom({}, 1.0, 1.0), std::invalid_argument);
}
