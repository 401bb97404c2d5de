#pragma once

#include "dskrv/lie.hpp"
#include "dskrv/poly.hpp"
#include "dskrv/push.hpp"
#include "dskrv/word.hpp"

#include <random>
#include <vector>

namespace testutil {

using namespace dskrv;

inline Word W(const char* s, Alphabet a = Alphabet::xy) { return Word::parse(s, a); }

inline Poly P(const char* s, Alphabet a = Alphabet::xy) {
    return Poly::monomial(Word::parse(s, a));
}

inline Rational R(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, int degree, Alphabet a = Alphabet::xy) {
    std::uniform_int_distribution<std::uint64_t> bits(
        0, degree >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1);
    return Word(a, degree == 0 ? 0 : bits(rng), degree);
}

inline Poly random_poly(Rng& rng, int max_degree, int terms,
                        Alphabet a = Alphabet::xy) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    Poly p(a);
    for (int i = 0; i < terms; ++i)
        p.add_term(random_word(rng, deg(rng), a), R(num(rng), den(rng)));
    return p;
}

// Random combination of degree-n Lyndon expansions; always a Lie element.
inline Poly random_lie(Rng& rng, int degree, Alphabet a = Alphabet::xy) {
    std::uniform_int_distribution<long long> num(-5, 5);
    Poly p(a);
    for (const auto& e : lyndon_basis(degree, a).elements)
        p += R(num(rng)) * e.expansion;
    return p;
}

// Random sum of full push orbits (taken with the multiplicity of the orbit
// traversal); push-invariant by construction.
inline Poly random_push_orbit_sum(Rng& rng, int degree, int orbits,
                                  Alphabet a = Alphabet::xy) {
    std::uniform_int_distribution<long long> num(-5, 5);
    Poly p(a);
    for (int i = 0; i < orbits; ++i) {
        const Word w = random_word(rng, degree, a);
        const Rational c = R(num(rng));
        for (const Word& v : push_list(w)) p.add_term(v, c);
    }
    return p;
}

}  // namespace testutil
