#include <doctest.h>

#include "batrel/error.hpp"
#include "batrel/rng.hpp"
#include "batrel/state_vector.hpp"

using namespace batrel;

TEST_CASE("parse and print") {
    const auto x = StateVector::parse("10110");
    CHECK(x.size() == 5);
    CHECK(x.bits() == 0b01101);
    CHECK(x.to_string() == "10110");
    CHECK(x.to_tuple_string() == "(1, 0, 1, 1, 0)");
    CHECK(StateVector::parse("(1, 0, 1, 1, 0)") == x);
    CHECK(x.ones() == 3);
    CHECK(x.zeros() == 2);
    CHECK_THROWS_AS(StateVector::parse("10x"), InputError);
}

TEST_CASE("bounds") {
    CHECK_THROWS_AS(StateVector(65, 0), InputError);
    CHECK_THROWS_AS(StateVector(3, 0b1000), InputError);
    CHECK(StateVector::all_ones(64).ones() == 64);
    CHECK(StateVector::all_ones(64).is_all_ones());
    CHECK(StateVector::all_zeros(0).is_all_ones());
}

TEST_CASE("with and dominance") {
    const auto x = StateVector::parse("10000");
    const auto y = x.with(3, true);
    CHECK(y.to_string() == "10010");
    CHECK(dominated_by(x, y));
    CHECK_FALSE(dominated_by(y, x));
    CHECK_THROWS_AS(x.with(5, true), InputError);
}

TEST_CASE("splitmix64 reference output") {
    // First output for seed 0 of the xoshiro256** reference implementation.
    SplitMix64 sm(0);
    CHECK(sm.next() == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("xoshiro256 is deterministic and uniform() stays in [0,1)") {
    Xoshiro256 a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const auto va = a.next();
        CHECK(va == b.next());
        differs |= va != c.next();
    }
    CHECK(differs);
    Xoshiro256 r(7);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
    for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}
