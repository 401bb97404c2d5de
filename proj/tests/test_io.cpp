#include "helpers.hpp"

#include "dskrv/io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dskrv;
using testutil::P;
using testutil::R;
using testutil::W;

TEST_CASE("poly text format") {
    const Poly p = P("xxy") - R(2) * P("xyx") + R(1, 3) * P("") ;
    const std::string text = poly_to_text(p);
    CHECK(text == "alphabet: xy\n1/3 1\n1/1 xxy\n-2/1 xyx\n");
    CHECK(parse_poly_text(text) == p);
}

TEST_CASE("parser accepts comments, signs, and bare integers") {
    const std::string text =
        "# leading comment\n"
        "alphabet: xy\n"
        "\n"
        "+1 xxy   # inline comment\n"
        "-2/1 xyx\n"
        "1/3 1\n";
    const Poly p = parse_poly_text(text);
    CHECK(p.coeff(W("xxy")) == 1);
    CHECK(p.coeff(W("xyx")) == R(-2));
    CHECK(p.coeff(W("")) == R(1, 3));
}

TEST_CASE("parser accumulates repeated words and other alphabet") {
    const Poly p = parse_poly_text("alphabet: ab\n1/2 ab\n1/2 ab\n");
    CHECK(p.coeff(Word::parse("ab", Alphabet::ab)) == 1);
    CHECK(p.alphabet() == Alphabet::ab);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_poly_text("alphabet: xy\n2/0 xy\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()) == "zero denominator at line 2");
    }

    CHECK_THROWS_AS(parse_poly_text("1/1 xy\n"), ParseError);          // no header
    CHECK_THROWS_AS(parse_poly_text("alphabet: qq\n"), ParseError);    // bad alphabet
    CHECK_THROWS_AS(parse_poly_text("alphabet: xy\nfoo xy\n"), ParseError);
    CHECK_THROWS_AS(parse_poly_text("alphabet: xy\n1/1 xz\n"), ParseError);
    CHECK_THROWS_AS(parse_poly_text("alphabet: xy\n1/1 xy junk\n"), ParseError);
}

TEST_CASE("json round trip") {
    const Poly p = P("xxy") - R(2, 7) * P("xyx");
    const nlohmann::json j = poly_to_json(p);
    CHECK(j["alphabet"] == "xy");
    CHECK(poly_from_json(j) == p);

    // arbitrary precision survives the trip
    Poly big(Alphabet::xy);
    big.add_term(W("xy"), Rational(Integer("123456789012345678901234567890"),
                                   Integer("987654321098765432109876543211")));
    CHECK(poly_from_json(poly_to_json(big)) == big);
}

TEST_CASE("text round trip on random polynomials") {
    testutil::Rng rng(1234);
    for (int i = 0; i < 25; ++i) {
        const Poly p = testutil::random_poly(rng, 8, 12);
        REQUIRE(parse_poly_text(poly_to_text(p)) == p);
        REQUIRE(poly_from_json(poly_to_json(p)) == p);
    }
}

TEST_CASE("certificates round trip and verify") {
    const auto basis = ds_basis(3);
    const BasisCertificate cert = certificate_for(3, basis);

    const std::string text = certificate_to_text(cert);
    std::istringstream in(text);
    const BasisCertificate back = parse_certificate_text(in);
    CHECK(back.weight == 3);
    REQUIRE(back.elements.size() == 1);
    CHECK(back.elements[0] == basis[0].poly);

    const BasisCertificate jback = certificate_from_json(certificate_to_json(cert));
    CHECK(jback.elements == back.elements);

    for (const CertificateCheck& c : verify_certificate(back)) REQUIRE(c.pass);
}

TEST_CASE("tampered certificates fail verification") {
    const auto basis = ds_basis(3);
    BasisCertificate cert = certificate_for(3, basis);
    Poly tampered = cert.elements[0];
    tampered.add_term(W("xyx"), R(1));   // bend one coefficient
    cert.elements[0] = tampered;
    bool all = true;
    for (const CertificateCheck& c : verify_certificate(cert)) all = all && c.pass;
    CHECK(!all);
}

TEST_CASE("lyndon table export") {
    CHECK(lyndon_table(2) == "xy\t1/1 xy -1/1 yx\n");
    const std::string t3 = lyndon_table(3);
    CHECK(t3 == "xxy\t1/1 xxy -2/1 xyx 1/1 yxx\n"
                "xyy\t1/1 xyy -2/1 yxy 1/1 yyx\n");
}

TEST_CASE("certificates of empty spaces") {
    const BasisCertificate cert = certificate_for(4, ds_basis(4));
    const std::string text = certificate_to_text(cert);
    std::istringstream in(text);
    const BasisCertificate back = parse_certificate_text(in);
    CHECK(back.weight == 4);
    CHECK(back.elements.empty());
    for (const CertificateCheck& c : verify_certificate(back)) REQUIRE(c.pass);
}
