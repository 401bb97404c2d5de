#include "helpers.hpp"

#include "dskrv/cyclic.hpp"
#include "dskrv/lie.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dskrv;
using testutil::P;
using testutil::R;
using testutil::W;

TEST_CASE("trace identifies rotations") {
    CHECK(trace(P("xy") - P("yx")).is_zero());
    CyclicPoly expected(Alphabet::xy);
    expected.add_class(W("xyy"), R(-1));
    expected.add_class(W("xxy"), R(-1));
    CHECK(trace(-P("yyx") - P("xxy")) == expected);
    CHECK(trace(Poly()).is_zero());
    CHECK(trace(P("xyxy")).coeff(W("yxyx")) == 1);
}

TEST_CASE("trace target small cases") {
    CyclicPoly two(Alphabet::xy);
    two.add_class(W("xy"), R(2));
    CHECK(trace_target(2) == two);

    CyclicPoly three(Alphabet::xy);
    three.add_class(W("xxy"), R(3));
    three.add_class(W("xyy"), R(3));
    CHECK(trace_target(3) == three);

    CHECK_THROWS_AS(trace_target(1), std::invalid_argument);
}

TEST_CASE("trace target coefficients are the rotation orbit sizes") {
    for (int n = 2; n <= 10; ++n) {
        const CyclicPoly t = trace_target(n);
        for (const auto& [w, c] : t.terms())
            REQUIRE(c == rotation_orbit_size(w));
    }
}

TEST_CASE("trace is cyclic on products") {
    testutil::Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        const Poly p = testutil::random_poly(rng, 4, 5);
        const Poly q = testutil::random_poly(rng, 4, 5);
        REQUIRE(trace(p * q) == trace(q * p));
    }
}

TEST_CASE("proportionality of cyclic elements") {
    const CyclicPoly t3 = trace_target(3);
    CHECK(proportionality(R(-1, 3) * t3, t3) == Rational(-1) / 3);
    CHECK(proportionality(CyclicPoly(), t3) == Rational(0));
    CHECK(!proportionality(trace(P("xxy")), t3).has_value());
    CHECK(!proportionality(t3, CyclicPoly()).has_value());
}
