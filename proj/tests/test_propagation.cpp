#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "compflex/propagation.hpp"
#include "compflex/rng.hpp"

using namespace compflex;

TEST_CASE("pathloss law") {
    CHECK(pathloss(0, 4) == 1.0);
    CHECK(pathloss(100, 4) == doctest::Approx(9.6098e-9).epsilon(1e-4));
    CHECK(pathloss(-50, 3) == doctest::Approx(7.5386e-6).epsilon(1e-4));
    CHECK(pathloss(-50, 3) == pathloss(50, 3));

    SUBCASE("strictly decreasing in |d|, bounded by 1") {
        for (double alpha : {3.0, 4.0, 5.0}) {
            double prev = 2.0;
            for (double d = 0; d <= 400; d += 0.5) {
                const double l = pathloss(d, alpha);
                CHECK(l < prev);
                CHECK(l <= 1.0);
                prev = l;
            }
        }
    }
}

TEST_CASE("dBm to watts") {
    CHECK(noise_watts(0) == doctest::Approx(1e-3));
    CHECK(noise_watts(30) == doctest::Approx(1.0));
    CHECK(noise_watts(-174) == doctest::Approx(3.9811e-21).epsilon(1e-4));
}

TEST_CASE("fading gains are unit-mean exponential") {
    SplitMix64 stream = trial_stream(123, 0);
    const int n = 1'000'000;
    std::vector<double> draws(n);
    double sum = 0.0;
    int exceed = 0;
    for (double& g : draws) {
        g = draw_fading(stream);
        CHECK(g >= 0.0);
        sum += g;
        if (g > std::log(10.0))
            ++exceed;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.005));
    // exponential tail: P(g > ln 10) = 0.1
    CHECK(static_cast<double>(exceed) / n == doctest::Approx(0.1).epsilon(0.03));

    SUBCASE("Kolmogorov-Smirnov distance to 1 - exp(-t)") {
        std::sort(draws.begin(), draws.end());
        double d_ks = 0.0;
        for (int i = 0; i < n; ++i) {
            const double cdf = 1.0 - std::exp(-draws[static_cast<size_t>(i)]);
            d_ks = std::max(d_ks, std::abs(cdf - (i + 1.0) / n));
            d_ks = std::max(d_ks, std::abs(cdf - static_cast<double>(i) / n));
        }
        CHECK(d_ks < 0.002);
    }
}

TEST_CASE("trial substreams are reproducible and distinct") {
    SplitMix64 a = trial_stream(42, 7);
    SplitMix64 b = trial_stream(42, 7);
    SplitMix64 c = trial_stream(42, 8);
    for (int i = 0; i < 100; ++i) {
        const uint64_t x = a.next();
        CHECK(x == b.next());
        CHECK(x != c.next());
    }
}

TEST_CASE("link realization") {
    const LinkRealization unit = LinkRealization::unit(3);
    CHECK(unit.g_mb == 1.0);
    CHECK(unit.gain({LinkKind::BB, Side::Right, 2}) == 1.0);
    CHECK_THROWS_AS(unit.gain({LinkKind::BB, Side::Left, 0}), std::invalid_argument);

    SplitMix64 stream = trial_stream(1, 0);
    const LinkRealization r = draw_link_realization(stream, 2);
    CHECK(r.tiers.size() == 2);
    CHECK(r.gain({LinkKind::MB, Side::Left, 1}) == r.tiers[0].mb_l);
    CHECK(r.gain({LinkKind::MM, Side::Right, 2}) == r.tiers[1].mm_r);
    CHECK(r.g_mb != r.g_bm);
}
