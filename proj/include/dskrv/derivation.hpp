#pragma once

#include "dskrv/lie.hpp"
#include "dskrv/linalg.hpp"
#include "dskrv/poly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace dskrv {

// Derivation of the free algebra determined by its values on the two
// generators and extended by the Leibniz rule.
struct GenDerivation {
    Poly val_x, val_y;

    Alphabet alphabet() const {
        if (!val_x.is_zero()) return val_x.alphabet();
        if (!val_y.is_zero()) return val_y.alphabet();
        return Alphabet::xy;
    }
    bool is_zero() const { return val_x.is_zero() && val_y.is_zero(); }

    friend bool operator==(const GenDerivation& a, const GenDerivation& b) {
        return a.val_x == b.val_x && a.val_y == b.val_y;
    }
};

// Leibniz extension: on a word, the sum over letter positions of the word
// with that letter replaced by its image.
inline Poly apply(const GenDerivation& d, const Poly& p) {
    Poly out(d.alphabet());
    for (const auto& [w, c] : p.terms()) {
        if (w.empty())
            throw std::invalid_argument("derivation applied to a constant term");
        for (int i = 0; i < w.degree(); ++i) {
            const Poly& img = w.letter(i) ? d.val_y : d.val_x;
            if (img.is_zero()) continue;
            out += c * (Poly::monomial(prefix(w, i)) * img *
                        Poly::monomial(suffix(w, w.degree() - 1 - i)));
        }
    }
    return out;
}

inline GenDerivation bracket(const GenDerivation& d1, const GenDerivation& d2) {
    return {apply(d1, d2.val_x) - apply(d2, d1.val_x),
            apply(d1, d2.val_y) - apply(d2, d1.val_y)};
}

// Tangential derivation x -> [x, h], y -> [y, g].
struct TangentialDerivation {
    Poly g, h;

    Alphabet alphabet() const {
        if (!g.is_zero()) return g.alphabet();
        if (!h.is_zero()) return h.alphabet();
        return Alphabet::xy;
    }
    bool is_zero() const { return g.is_zero() && h.is_zero(); }

    friend bool operator==(const TangentialDerivation& a,
                           const TangentialDerivation& b) {
        return a.g == b.g && a.h == b.h;
    }
};

inline GenDerivation to_gen(const TangentialDerivation& t) {
    const Alphabet a = t.alphabet();
    return {lie_bracket(Poly::generator(a, 0), t.h),
            lie_bracket(Poly::generator(a, 1), t.g)};
}

inline Poly apply(const TangentialDerivation& t, const Poly& p) {
    return apply(to_gen(t), p);
}

// The partner g' = sum_{i>=0} ((-1)^{i-1} / i!) x^i y dx^i(g_x) of a
// homogeneous g. For push-invariant Lie g the pair h = -g' is the unique
// Lie element with [x,h] + [y,g] = 0.
inline Poly partner(const Poly& g) {
    if (g.is_zero()) return Poly(g.alphabet());
    if (!is_homogeneous(g))
        throw std::invalid_argument("partner needs a homogeneous argument");
    const Alphabet a = g.alphabet();
    const Poly y = Poly::generator(a, 1);
    Poly gx = decompose(g).before_x;
    Poly out(a);
    Integer ifact = 1;
    for (int i = 0; !gx.is_zero(); ++i) {
        if (i > 0) ifact *= i;
        const Rational c = Rational(i % 2 == 0 ? -1 : 1) / Rational(ifact);
        out += c * (Poly::monomial(Word::power(a, 0, i)) * y * gx);
        gx = dx(gx);
    }
    return out;
}

// Inverts t -> [letter, t] on homogeneous Lie elements: returns the unique
// t of degree n-1 with [letter, t] = v. ad(letter) is injective on the Lie
// pieces of degree >= 2, so for degree(v) >= 3 the solution is unique when
// it exists; anything outside the image is reported, never approximated.
inline Poly ad_divide(const Poly& v, int letter) {
    if (v.is_zero()) return Poly(v.alphabet());
    if (!is_homogeneous(v))
        throw std::invalid_argument("ad_divide needs a homogeneous argument");
    const int n = max_degree(v);
    if (n < 3) throw std::invalid_argument("ad_divide needs degree >= 3");
    const Alphabet a = v.alphabet();
    const Poly gen = Poly::generator(a, letter);

    const LyndonBasis basis = lyndon_basis(n - 1, a);
    std::vector<Poly> cols;
    cols.reserve(basis.size());
    std::map<Word, std::size_t> row_of;
    auto index_words = [&row_of](const Poly& p) {
        for (const auto& [w, c] : p.terms()) row_of.try_emplace(w, row_of.size());
    };
    for (const LyndonBasisElement& e : basis.elements) {
        cols.push_back(lie_bracket(gen, e.expansion));
        index_words(cols.back());
    }
    index_words(v);

    RationalMatrix m(row_of.size(), cols.size());
    std::vector<Rational> rhs(row_of.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [w, c] : cols[j].terms()) m.at(row_of[w], j) = c;
    for (const auto& [w, c] : v.terms()) rhs[row_of[w]] = c;

    const auto x = solve(m, rhs);
    if (!x) throw std::domain_error("value is not in the image of ad");
    Poly t(a);
    for (std::size_t j = 0; j < cols.size(); ++j)
        t += (*x)[j] * basis.elements[j].expansion;
    if (lie_bracket(gen, t) != v)
        throw std::domain_error("value is not in the image of ad");
    return t;
}

// Recovers (g, h) from generator values [x,h], [y,g]; throws when the
// derivation is not tangential.
inline TangentialDerivation to_tangential(const GenDerivation& d) {
    TangentialDerivation t;
    if (!d.val_y.is_zero()) t.g = ad_divide(d.val_y, 1);
    if (!d.val_x.is_zero()) t.h = ad_divide(d.val_x, 0);
    if (t.g.is_zero() && !t.h.is_zero()) t.g = Poly(t.h.alphabet());
    if (t.h.is_zero() && !t.g.is_zero()) t.h = Poly(t.g.alphabet());
    return t;
}

// Poisson (Ihara) bracket {f, f'} = D_f(f') - D_{f'}(f) + [f, f'] with
// D_f: x -> 0, y -> [y, f].
inline Poly poisson_bracket(const Poly& f, const Poly& f2) {
    if (!is_lie(f) || !is_lie(f2))
        throw std::invalid_argument("poisson bracket needs Lie arguments");
    if (f.is_zero() || f2.is_zero()) return Poly(f.alphabet());
    require_same_alphabet(f.alphabet(), f2.alphabet());
    const Alphabet a = f.alphabet();
    const Poly y = Poly::generator(a, 1);
    const GenDerivation df{Poly(a), lie_bracket(y, f)};
    const GenDerivation df2{Poly(a), lie_bracket(y, f2)};
    return apply(df, f2) - apply(df2, f) + lie_bracket(f, f2);
}

}  // namespace dskrv
