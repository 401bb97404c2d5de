#include "helpers.hpp"

#include "dskrv/derivation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dskrv;
using testutil::P;
using testutil::R;
using testutil::W;

namespace {
const Poly X = Poly::generator(Alphabet::xy, 0);
const Poly Y = Poly::generator(Alphabet::xy, 1);

GenDerivation random_derivation(testutil::Rng& rng) {
    return {testutil::random_lie(rng, 2), testutil::random_lie(rng, 2)};
}
}  // namespace

TEST_CASE("derivations extend by the leibniz rule") {
    const GenDerivation d{Poly(Alphabet::xy), lie_bracket(Y, X)};
    CHECK(apply(d, X).is_zero());
    CHECK(apply(d, Y) == lie_bracket(Y, X));
    CHECK_THROWS_AS(apply(d, Poly::one()), std::invalid_argument);

    testutil::Rng rng(5);
    for (int i = 0; i < 15; ++i) {
        const GenDerivation e = random_derivation(rng);
        Poly p = testutil::random_poly(rng, 4, 5);
        Poly q = testutil::random_poly(rng, 4, 5);
        p.add_term(W(""), -p.coeff(W("")));
        q.add_term(W(""), -q.coeff(W("")));
        if (p.is_zero() || q.is_zero()) continue;
        REQUIRE(apply(e, p * q) == apply(e, p) * q + p * apply(e, q));
    }
}

TEST_CASE("derivation bracket") {
    testutil::Rng rng(6);
    const GenDerivation d = random_derivation(rng);
    CHECK(bracket(d, d).is_zero());

    for (int i = 0; i < 8; ++i) {
        const GenDerivation d1 = random_derivation(rng);
        const GenDerivation d2 = random_derivation(rng);
        const GenDerivation d3 = random_derivation(rng);
        const GenDerivation jac1 = bracket(bracket(d1, d2), d3);
        const GenDerivation jac2 = bracket(bracket(d2, d3), d1);
        const GenDerivation jac3 = bracket(bracket(d3, d1), d2);
        REQUIRE((jac1.val_x + jac2.val_x + jac3.val_x).is_zero());
        REQUIRE((jac1.val_y + jac2.val_y + jac3.val_y).is_zero());
    }
}

TEST_CASE("partner of the weight-3 image") {
    const Poly g = -lie_bracket(X, lie_bracket(X, Y));
    const Poly expected = P("xyy") - R(2) * P("yxy") + P("yyx");
    CHECK(partner(g) == expected);
    CHECK(expected == lie_bracket(lie_bracket(X, Y), Y));
    CHECK(partner(Poly(Alphabet::xy)).is_zero());

    // the defining identity of the pair (g, h = -partner(g))
    const Poly h = -partner(g);
    CHECK((lie_bracket(X, h) + lie_bracket(Y, g)).is_zero());

    // generator-valued version: x -> g, y -> partner(g) kills [x,y]
    const GenDerivation e{g, partner(g)};
    CHECK(apply(e, lie_bracket(X, Y)).is_zero());

    CHECK_THROWS_AS(partner(X + lie_bracket(X, Y)), std::invalid_argument);
}

TEST_CASE("ad division") {
    const Poly t = lie_bracket(Y, lie_bracket(Y, X));
    CHECK(ad_divide(lie_bracket(X, t), 0) == t);
    CHECK(ad_divide(Poly(Alphabet::xy), 0).is_zero());

    testutil::Rng rng(8);
    for (int n = 2; n <= 6; ++n) {
        const Poly s = testutil::random_lie(rng, n);
        if (s.is_zero()) continue;
        REQUIRE(ad_divide(lie_bracket(X, s), 0) == s);
        REQUIRE(ad_divide(lie_bracket(Y, s), 1) == s);
    }

    // [[x,y],y] is not in the image of ad(x) in degree 3
    CHECK_THROWS_AS(ad_divide(lie_bracket(lie_bracket(X, Y), Y), 0),
                    std::domain_error);
    CHECK_THROWS_AS(ad_divide(P("xyx"), 0), std::domain_error);
}

TEST_CASE("tangential round trip") {
    const Poly g = -lie_bracket(X, lie_bracket(X, Y));
    const TangentialDerivation t{g, -partner(g)};
    const GenDerivation d = to_gen(t);
    CHECK(d.val_x == lie_bracket(X, t.h));
    CHECK(d.val_y == lie_bracket(Y, t.g));
    const TangentialDerivation back = to_tangential(d);
    CHECK(back == t);
}

TEST_CASE("poisson bracket") {
    const Poly f = lie_bracket(X, lie_bracket(X, Y)) +
                   lie_bracket(Y, lie_bracket(Y, X));
    CHECK(poisson_bracket(f, f).is_zero());
    CHECK_THROWS_AS(poisson_bracket(P("xy"), f), std::invalid_argument);

    testutil::Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        const Poly a = testutil::random_lie(rng, 3);
        const Poly b = testutil::random_lie(rng, 3);
        const Poly c = testutil::random_lie(rng, 4);
        REQUIRE(poisson_bracket(a, b + c) ==
                poisson_bracket(a, b) + poisson_bracket(a, c));
        REQUIRE(is_lie(poisson_bracket(a, c)));
        REQUIRE(poisson_bracket(a, b) == -poisson_bracket(b, a));
    }
}
