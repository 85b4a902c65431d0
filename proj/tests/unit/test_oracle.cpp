#include <doctest.h>

#include <cmath>

#include "batrel/appbat.hpp"
#include "batrel/error.hpp"
#include "batrel/oracle.hpp"
#include "batrel/rng.hpp"
#include "oracles.hpp"

using namespace batrel;

TEST_CASE("exact reliability of the bridge") {
    for (auto [p, want] : {std::pair{0.9, 0.971190}, {0.99, 0.999701}, {0.5, 0.468750}, {0.8, 0.890880}}) {
        CAPTURE(p);
        const auto bridge = bridge_fixture(p);
        CHECK(std::fabs(exact_reliability(bridge.network, bridge.distribution) - want) <= 5e-7);
    }
}

TEST_CASE("single arc") {
    const Network net(2, {{1, 2}}, Orientation::directed);
    for (double p : {0.0, 0.3, 0.75, 1.0}) {
        CHECK(exact_reliability(net, uniform_distribution(1, p)) == doctest::Approx(p).epsilon(1e-15));
    }
}

TEST_CASE("arc caps") {
    const Network big = generate_random_network(10, 30, Orientation::directed, 1);
    CHECK_THROWS_AS(exact_reliability(big, uniform_distribution(30, 0.9)), CapabilityError);
    const Network huge = generate_random_network(10, kExactArcHardCap + 1, Orientation::directed, 1);
    CHECK_THROWS_AS(exact_reliability(huge, uniform_distribution(kExactArcHardCap + 1, 0.9), 64),
                    CapabilityError);
    const Network small = generate_random_network(6, 12, Orientation::directed, 1);
    CHECK_THROWS_AS(exact_reliability(small, uniform_distribution(12, 0.9), 11), CapabilityError);
    CHECK_NOTHROW(exact_reliability(small, uniform_distribution(12, 0.9), 12));
}

TEST_CASE("exact agrees with brute force and with AppBAT from level 0") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Xoshiro256 rng(seed);
        const int n = 2 + static_cast<int>(rng.below(6));
        const auto orientation = rng.below(2) ? Orientation::directed : Orientation::undirected;
        const int cap = orientation == Orientation::directed ? n * (n - 1) : n * (n - 1) / 2;
        const int m = std::min({cap, 14, n - 1 + static_cast<int>(rng.below(10))});
        const Network net = generate_random_network(n, m, orientation, seed);
        std::vector<double> p(static_cast<std::size_t>(m));
        for (auto& v : p) v = rng.uniform();
        const ArcDistribution dist(p);
        const double exact = exact_reliability(net, dist);
        CHECK(std::fabs(exact - static_cast<double>(testing::brute_force_reliability(net, dist))) <= 1e-12);
        CHECK(std::fabs(exact - approximate_reliability(net, dist, 0).reliability) <= 1e-12);
    }
}

TEST_CASE("exact reliability is monotone in each arc probability") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Network net = generate_random_network(6, 10, Orientation::undirected, seed);
        Xoshiro256 rng(seed + 7);
        std::vector<double> p(10);
        for (auto& v : p) v = 0.05 + 0.9 * rng.uniform();
        const double base = exact_reliability(net, ArcDistribution(p));
        for (int i = 0; i < 10; ++i) {
            auto q = p;
            q[static_cast<std::size_t>(i)] += 0.04;
            CHECK(exact_reliability(net, ArcDistribution(q)) >= base - 1e-15);
        }
    }
}

TEST_CASE("Monte-Carlo estimate") {
    const auto bridge = bridge_fixture(0.9);
    SUBCASE("near the exact value") {
        const auto e = mcs_estimate(bridge.network, bridge.distribution, 1'000'000, 7);
        CHECK(e.samples == 1'000'000);
        CHECK(e.seed == 7);
        CHECK(e.standard_error == doctest::Approx(std::sqrt(e.estimate * (1 - e.estimate) / 1e6)));
        CHECK(std::fabs(e.estimate - 0.971190) <= 4 * e.standard_error);
    }
    SUBCASE("deterministic and independent of worker count") {
        const auto a = mcs_estimate(bridge.network, bridge.distribution, 200'000, 3, 1);
        const auto b = mcs_estimate(bridge.network, bridge.distribution, 200'000, 3, 1);
        const auto c = mcs_estimate(bridge.network, bridge.distribution, 200'000, 3, 4);
        CHECK(a.estimate == b.estimate);
        CHECK(a.estimate == c.estimate);
        const auto d = mcs_estimate(bridge.network, bridge.distribution, 200'000, 4, 1);
        CHECK(a.estimate != d.estimate);
    }
    SUBCASE("certain arcs") {
        const auto e = mcs_estimate(bridge.network, uniform_distribution(5, 1.0), 10, 0);
        CHECK(e.estimate == 1.0);
        CHECK(e.standard_error == 0.0);
        const auto z = mcs_estimate(bridge.network, uniform_distribution(5, 0.0), 10, 0);
        CHECK(z.estimate == 0.0);
    }
    SUBCASE("zero samples") {
        CHECK_THROWS_AS(mcs_estimate(bridge.network, bridge.distribution, 0, 0), InputError);
    }
}

TEST_CASE("Monte-Carlo within 4 SE on random small networks") {
    int outside = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Network net = generate_random_network(6, 11, Orientation::directed, seed);
        const ArcDistribution dist = uniform_distribution(11, 0.8);
        const double exact = exact_reliability(net, dist);
        const auto e = mcs_estimate(net, dist, 100'000, seed);
        if (std::fabs(e.estimate - exact) > 4 * std::max(e.standard_error, 1e-12)) ++outside;
    }
    CHECK(outside == 0);
}
