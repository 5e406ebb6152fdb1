#include <doctest.h>

#include "../oracles.hpp"
#include "vab/depth.hpp"

using vab::BandMode;
using vab::Curve;

namespace {

std::vector<Curve> random_window(oracle::Rng& rng, std::size_t w, std::size_t d, bool ties) {
    std::vector<Curve> out(w, Curve(d));
    for (auto& c : out)
        for (double& x : c) x = ties ? static_cast<double>(oracle::below(rng, 3)) : oracle::unit(rng);
    return out;
}

}  // namespace

TEST_CASE("mbd: identical curves") {
    const std::vector<Curve> same(7, Curve{0.2, 0.4, 0.1});
    CHECK(vab::modified_band_depth(same[0], same, BandMode::Closed) == 1.0);
    CHECK(vab::modified_band_depth(same[0], same, BandMode::Open) == 0.0);
}

TEST_CASE("mbd: three scalar curves around zero") {
    const std::vector<Curve> w{{-1}, {1}, {0}};
    CHECK(vab::modified_band_depth(Curve{0}, w, BandMode::Closed) == 1.0);
}

TEST_CASE("mbd: rejects bad input") {
    const std::vector<Curve> one{{0.0}};
    CHECK_THROWS_AS(vab::modified_band_depth(Curve{0}, one, BandMode::Closed), std::invalid_argument);
    const std::vector<Curve> ragged{{0.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(vab::modified_band_depth(Curve{0}, ragged, BandMode::Closed), std::invalid_argument);
    const std::vector<Curve> two{{0.0}, {1.0}};
    CHECK_THROWS_AS(vab::modified_band_depth(Curve{0, 1}, two, BandMode::Closed), std::invalid_argument);
}

TEST_CASE("mbd matches pair enumeration") {
    oracle::Rng rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        const bool ties = trial % 2 == 0;
        const auto w = random_window(rng, 2 + oracle::below(rng, 9), 1 + oracle::below(rng, 12), ties);
        const auto& target = w[oracle::below(rng, w.size())];
        for (auto mode : {BandMode::Closed, BandMode::Open}) {
            const double got = vab::modified_band_depth(target, w, mode);
            CHECK(got == doctest::Approx(oracle::band_depth(target, w, mode == BandMode::Closed)).epsilon(1e-14));
            CHECK(got >= 0.0);
            CHECK(got <= 1.0);
        }
        CHECK(vab::modified_band_depth(target, w, BandMode::Closed) >=
              vab::modified_band_depth(target, w, BandMode::Open));
    }
}

TEST_CASE("mbd is invariant under coordinate permutations and positive affine maps") {
    oracle::Rng rng(72);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + oracle::below(rng, 8);
        auto w = random_window(rng, 2 + oracle::below(rng, 6), d, true);
        const auto target = w[0];
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        // Small integers and these coefficients keep the affine image exact.
        const double a = std::array{0.5, 2.0, 3.0}[oracle::below(rng, 3)];
        const double b = std::array{-1.0, 0.25, 7.0}[oracle::below(rng, 3)];
        auto permuted = w, scaled = w;
        for (std::size_t c = 0; c < w.size(); ++c) {
            for (std::size_t i = 0; i < d; ++i) {
                permuted[c][i] = w[c][perm[i]];
                scaled[c][i] = a * w[c][i] + b;
            }
        }
        for (auto mode : {BandMode::Closed, BandMode::Open}) {
            const double base = vab::modified_band_depth(target, w, mode);
            CHECK(vab::modified_band_depth(permuted[0], permuted, mode) == doctest::Approx(base).epsilon(1e-14));
            CHECK(vab::modified_band_depth(scaled[0], scaled, mode) == doctest::Approx(base).epsilon(1e-14));
        }
    }
}

TEST_CASE("rolling_depth: examples") {
    const std::vector<Curve> flat(10, Curve{1.0, 2.0});
    const auto rd = vab::rolling_depth(flat, 7, BandMode::Closed);
    for (std::size_t t = 0; t < 10; ++t) {
        if (t < 6) {
            CHECK_FALSE(rd.values[t].has_value());
        } else {
            CHECK(*rd.values[t] == 1.0);
        }
    }
    const auto exact = vab::rolling_depth(std::vector<Curve>(7, Curve{0.0}), 7, BandMode::Closed);
    CHECK(std::count_if(exact.values.begin(), exact.values.end(), [](const auto& v) { return v.has_value(); }) == 1);

    std::vector<Curve> spike(6, Curve{0.0});
    spike.push_back(Curve{10.0});
    const auto s = vab::rolling_depth(spike, 7, BandMode::Closed);
    CHECK(*s.values[6] == 6.0 / 21.0);

    CHECK_THROWS_AS(vab::rolling_depth(spike, 8, BandMode::Closed), std::invalid_argument);
    CHECK_THROWS_AS(vab::rolling_depth(spike, 1, BandMode::Closed), std::invalid_argument);
}

TEST_CASE("rolling_depth uses the trailing window that includes today") {
    oracle::Rng rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t w = 2 + oracle::below(rng, 6);
        const auto series = random_window(rng, w + oracle::below(rng, 10), 4, false);
        const auto rd = vab::rolling_depth(series, w, BandMode::Closed);
        for (std::size_t t = w - 1; t < series.size(); ++t) {
            const std::vector<Curve> window(series.begin() + static_cast<std::ptrdiff_t>(t + 1 - w),
                                            series.begin() + static_cast<std::ptrdiff_t>(t + 1));
            CHECK(*rd.values[t] == doctest::Approx(oracle::band_depth(series[t], window, true)).epsilon(1e-14));
        }
    }
}

TEST_CASE("depth degrades monotonically as one curve moves away") {
    std::vector<Curve> base(7, Curve{0.0, 0.0, 0.0});
    for (std::size_t i = 0; i < 6; ++i) base[i] = Curve{0.1 * i, 0.2 * i, -0.1 * i};
    double previous = 2.0;
    for (int step = 0; step <= 20; ++step) {
        auto series = base;
        const double shift = 0.1 * step;
        series[6] = Curve{0.25 + shift, 0.5 + shift, -0.25 + shift};
        const double d = *vab::rolling_depth(series, 7, BandMode::Closed).values[6];
        CHECK(d <= previous);
        previous = d;
    }
    CHECK(previous == doctest::Approx(6.0 / 21.0));
}
