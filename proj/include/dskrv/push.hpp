#pragma once

#include "dskrv/poly.hpp"
#include "dskrv/word.hpp"

#include <optional>

namespace dskrv {

// Linear extension of the push operator to polynomials.
inline Poly push_poly(const Poly& p) {
    Poly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) out.add_term(push(w), c);
    return out;
}

// True when the push-extension fixes p, i.e. coefficients are constant on
// push orbits within every depth-graded piece.
inline bool is_push_invariant(const Poly& p) {
    for (const auto& [w, c] : p.terms())
        if (p.coeff(push(w)) != c) return false;
    return true;
}

// Push-constance for a homogeneous polynomial p of degree n-1: the
// coefficient of y^{n-1} vanishes and the sums over push_list(u), taken with
// multiplicity, agree on every monomial u != y^{n-1} of degree n-1. The
// common value must be 0 when n-1 is odd. Returns the value when p is
// push-constant, nothing otherwise.
inline std::optional<Rational> push_constant(const Poly& p) {
    if (p.is_zero()) return Rational(0);
    if (!is_homogeneous(p))
        throw std::invalid_argument("push-constance needs a homogeneous polynomial");
    const int d = max_degree(p);  // d = n - 1
    if (d < 2 || d > 24)
        throw std::invalid_argument("push-constance degree out of range");
    const Alphabet a = p.alphabet();
    const Word ypow = Word::power(a, 1, d);
    if (p.coeff(ypow) != 0) return std::nullopt;

    std::optional<Rational> value;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
        Word u(a, m, d);
        if (u == ypow) continue;
        Rational s = 0;
        for (const Word& v : push_list(u)) s += p.coeff(v);
        if (!value)
            value = s;
        else if (*value != s)
            return std::nullopt;
    }
    if (d % 2 == 1 && *value != 0) return std::nullopt;
    return value;
}

}  // namespace dskrv
