#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "vab/metrics.hpp"

using vab::GroundNorm;
using vab::PersistenceDiagram;

namespace {

oracle::Norm as_oracle(GroundNorm n) {
    switch (n) {
        case GroundNorm::L1: return oracle::Norm::L1;
        case GroundNorm::L2: return oracle::Norm::L2;
        case GroundNorm::LInf: return oracle::Norm::LInf;
    }
    return oracle::Norm::L1;
}

PersistenceDiagram example_d1() { return PersistenceDiagram::from_pairs(0, {{1, 2}, {2, 3}, {3, 3.2}}); }
PersistenceDiagram example_d2() { return PersistenceDiagram::from_pairs(0, {{0.9, 1.9}, {1.8, 3.3}}); }

}  // namespace

TEST_CASE("wasserstein: examples") {
    CHECK(vab::wasserstein(example_d1(), example_d2()).cost == doctest::Approx(0.9).epsilon(1e-12));
    const auto a = PersistenceDiagram::from_pairs(0, {{0, 2}});
    const auto b = PersistenceDiagram::from_pairs(0, {{0, 1}});
    CHECK(vab::wasserstein(a, b).cost == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(vab::wasserstein(example_d1(), example_d1()).cost == 0.0);
    CHECK(vab::wasserstein(PersistenceDiagram{}, PersistenceDiagram{}).cost == 0.0);
}

TEST_CASE("wasserstein: the optimal matching pairs (1,2) with (0.9,1.9)") {
    const auto m = vab::wasserstein(example_d1(), example_d2());
    bool found = false;
    for (const auto& p : m.pairs) {
        if (p.first == 0u && p.second == 0u) found = true;
    }
    CHECK(found);
    double total = 0.0;
    for (const auto& p : m.pairs) total += p.distance;
    CHECK(total == doctest::Approx(m.cost).epsilon(1e-15));
}

TEST_CASE("wasserstein: rejects essential points, mixed dimensions and q < 1") {
    const auto inf = PersistenceDiagram::from_pairs(0, {{0, vab::kInfinity}});
    CHECK_THROWS_AS(vab::wasserstein(inf, example_d1()), std::invalid_argument);
    CHECK_THROWS_AS(vab::bottleneck(inf, example_d1()), std::invalid_argument);
    auto mixed = example_d1();
    mixed.points.push_back({1, 0, 1});
    CHECK_THROWS_AS(vab::wasserstein(mixed, example_d2()), std::invalid_argument);
    CHECK_THROWS_AS(vab::wasserstein(example_d1(), PersistenceDiagram::from_pairs(1, {{0, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(vab::wasserstein(example_d1(), example_d2(), GroundNorm::L1, 0.5), std::invalid_argument);
}

TEST_CASE("bottleneck: examples") {
    CHECK(vab::bottleneck(example_d1(), example_d2()) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(vab::bottleneck(example_d1(), example_d1()) == 0.0);
    CHECK(vab::bottleneck(PersistenceDiagram::from_pairs(0, {{0, 1}}), PersistenceDiagram{}) == 0.5);
    CHECK(vab::wasserstein(example_d1(), example_d2(), GroundNorm::LInf, vab::kInfinity).cost ==
          doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("diagonal distance closed form") {
    const vab::PersistencePoint p{0, 1, 3};
    CHECK(vab::diagonal_distance(p, GroundNorm::L1) == 2.0);
    CHECK(vab::diagonal_distance(p, GroundNorm::L2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(vab::diagonal_distance(p, GroundNorm::LInf) == 1.0);
    for (auto n : {GroundNorm::L1, GroundNorm::L2, GroundNorm::LInf}) {
        CHECK(vab::diagonal_distance(p, n) == doctest::Approx(oracle::diagonal_cost(1, 3, as_oracle(n))).epsilon(1e-12));
    }
}

TEST_CASE("Hungarian wasserstein equals exhaustive bijection search") {
    oracle::Rng rng(51);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = oracle::random_diagram(rng, 4);
        const auto b = oracle::random_diagram(rng, 4);
        for (auto norm : {GroundNorm::L1, GroundNorm::L2, GroundNorm::LInf}) {
            for (double q : {1.0, 2.0, vab::kInfinity}) {
                const double want = oracle::exhaustive_wasserstein(a, b, as_oracle(norm), q);
                const double got = vab::wasserstein(a, b, norm, q).cost;
                CHECK(got == doctest::Approx(want).epsilon(1e-12).scale(1.0));
                ++checked;
            }
            const double bn = vab::bottleneck(a, b, norm);
            CHECK(bn == doctest::Approx(oracle::exhaustive_wasserstein(a, b, as_oracle(norm), vab::kInfinity))
                            .epsilon(1e-12)
                            .scale(1.0));
        }
    }
    CHECK(checked == 200 * 9);
}

TEST_CASE("metric axioms on random diagrams") {
    oracle::Rng rng(52);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = oracle::random_diagram(rng, 8);
        const auto b = oracle::random_diagram(rng, 8);
        const auto c = oracle::random_diagram(rng, 8);
        for (auto norm : {GroundNorm::L1, GroundNorm::L2, GroundNorm::LInf}) {
            for (double q : {1.0, 2.0}) {
                const double ab = vab::wasserstein(a, b, norm, q).cost;
                const double ba = vab::wasserstein(b, a, norm, q).cost;
                const double bc = vab::wasserstein(b, c, norm, q).cost;
                const double ac = vab::wasserstein(a, c, norm, q).cost;
                CHECK(ab >= 0.0);
                CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
                CHECK(vab::wasserstein(a, a, norm, q).cost == 0.0);
                CHECK(ac <= ab + bc + 1e-9);
            }
            const double ab = vab::bottleneck(a, b, norm);
            CHECK(ab == vab::bottleneck(b, a, norm));
            CHECK(vab::bottleneck(a, c, norm) <= ab + vab::bottleneck(b, c, norm) + 1e-9);
        }
    }
}

TEST_CASE("matching is a bijection of the augmented diagrams") {
    oracle::Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = oracle::random_diagram(rng, 10);
        const auto b = oracle::random_diagram(rng, 10);
        const auto m = vab::wasserstein(a, b, GroundNorm::L2, 2.0);
        std::vector<int> seen_a(a.size()), seen_b(b.size());
        double sum = 0.0;
        for (const auto& p : m.pairs) {
            if (p.first) ++seen_a[*p.first];
            if (p.second) ++seen_b[*p.second];
            CHECK((p.first || p.second));
            sum += p.distance * p.distance;
        }
        for (int s : seen_a) CHECK(s == 1);
        for (int s : seen_b) CHECK(s == 1);
        CHECK(std::sqrt(sum) == doctest::Approx(m.cost).epsilon(1e-12));
    }
}

TEST_CASE("hungarian_assignment on a small matrix") {
    const std::vector<double> cost{4, 1, 3, 2, 0, 5, 3, 2, 2};
    const auto a = vab::hungarian_assignment(cost, 3);
    double total = 0;
    for (std::size_t i = 0; i < 3; ++i) total += cost[i * 3 + a[i]];
    CHECK(total == 5.0);
    CHECK_THROWS_AS(vab::hungarian_assignment(cost, 2), std::invalid_argument);
}
