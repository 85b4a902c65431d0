#include <doctest.h>

#include <algorithm>

#include "batrel/bat.hpp"
#include "batrel/error.hpp"
#include "batrel/network.hpp"
#include "batrel/plsa.hpp"
#include "batrel/rng.hpp"
#include "oracles.hpp"

using namespace batrel;

using Layers = std::vector<std::vector<int>>;

TEST_CASE("bridge traces") {
    const Network net = bridge_fixture().network;

    const auto t1 = layer_trace(net, StateVector::parse("11100"));
    CHECK_FALSE(t1.connected);
    CHECK(t1.layers == Layers{{1}, {2, 3}, {}});
    CHECK_FALSE(is_connected(net, StateVector::parse("11100")));

    // 1 -a0-> 2 -a3-> 4
    const auto t2 = layer_trace(net, StateVector::parse("10010"));
    CHECK(t2.connected);
    CHECK(t2.layers == Layers{{1}, {2}, {4}});
    CHECK(is_connected(net, StateVector::parse("10010")));

    const auto t3 = layer_trace(net, StateVector::all_ones(5));
    CHECK(t3.connected);
    CHECK(t3.layers == Layers{{1}, {2, 3}, {4}});

    const auto t4 = layer_trace(net, StateVector::all_zeros(5));
    CHECK_FALSE(t4.connected);
    CHECK(t4.layers == Layers{{1}, {}});
}

TEST_CASE("dimension mismatch") {
    const Network net = bridge_fixture().network;
    CHECK_THROWS_AS(is_connected(net, StateVector::all_ones(4)), InputError);
    CHECK_THROWS_AS(layer_trace(net, StateVector::all_ones(6)), InputError);
}

TEST_CASE("undirected arcs are usable both ways") {
    const Network net(3, {{2, 1}, {3, 2}}, Orientation::undirected);
    CHECK(is_connected(net, StateVector::parse("11")));
    const Network directed(3, {{2, 1}, {3, 2}}, Orientation::directed);
    CHECK_FALSE(is_connected(directed, StateVector::parse("11")));
}

TEST_CASE("single node network is trivially connected") {
    const Network net(1, {}, Orientation::directed);
    CHECK(is_connected(net, StateVector(0, 0)));
}

TEST_CASE("checker matches the DFS oracle and respects monotonicity") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Xoshiro256 rng(seed);
        const int n = 2 + static_cast<int>(rng.below(9));       // 2..10
        const auto orientation = rng.below(2) ? Orientation::directed : Orientation::undirected;
        const int cap = orientation == Orientation::directed ? n * (n - 1) : n * (n - 1) / 2;
        const int m = std::min(cap, n - 1 + static_cast<int>(rng.below(12)));  // <= 20
        const Network net = generate_random_network(n, m, orientation, seed);
        ConnectivityChecker checker(net);

        auto check_one = [&](std::uint64_t bits) {
            const StateVector x(m, bits);
            const bool verdict = checker.connected(x);
            REQUIRE(verdict == testing::dfs_reachable(net, bits));
            REQUIRE(checker.trace(x).connected == verdict);
            if (verdict) {
                // Any superset of a connected vector stays connected.
                const int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
                REQUIRE(checker.connected(x.with(extra, true)));
            }
        };

        if (m <= 12) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) check_one(bits);
        } else {
            for (int s = 0; s < 4000; ++s) check_one(rng.next() & low_mask(m));
        }
    }
}

TEST_CASE("trace layers are disjoint, sorted and fed by the previous layer") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Network net = generate_random_network(8, 14, Orientation::directed, seed);
        Xoshiro256 rng(seed + 1000);
        for (int s = 0; s < 200; ++s) {
            const StateVector x(14, rng.next() & low_mask(14));
            const LayerTrace t = layer_trace(net, x);
            REQUIRE(t.layers.front() == std::vector<int>{1});
            REQUIRE(t.layers.size() <= static_cast<std::size_t>(net.node_count()) + 1);
            std::vector<int> where(9, -1);
            for (std::size_t k = 0; k < t.layers.size(); ++k) {
                REQUIRE(std::is_sorted(t.layers[k].begin(), t.layers[k].end()));
                for (int v : t.layers[k]) {
                    REQUIRE(where[static_cast<std::size_t>(v)] == -1);
                    where[static_cast<std::size_t>(v)] = static_cast<int>(k);
                }
            }
            for (std::size_t k = 1; k < t.layers.size(); ++k) {
                for (int v : t.layers[k]) {
                    bool fed = false;
                    for (int i = 0; i < 14; ++i) {
                        const Arc& a = net.arc(i);
                        fed |= x[i] && a.head == v && where[static_cast<std::size_t>(a.tail)] == static_cast<int>(k) - 1;
                    }
                    REQUIRE(fed);
                }
            }
            const bool sink_seen = where[8] >= 0;
            REQUIRE(sink_seen == t.connected);
            if (!t.connected) REQUIRE(t.layers.back().empty());
        }
    }
}
