#pragma once

#include "dskrv/poly.hpp"
#include "dskrv/rational.hpp"
#include "dskrv/word.hpp"

#include <map>
#include <optional>
#include <string>

namespace dskrv {

// Element of the trace space: polynomials modulo cyclic permutation of
// monomials. Keys are the lexicographically least rotations.
class CyclicPoly {
public:
    using TermMap = std::map<Word, Rational>;

    CyclicPoly() = default;
    explicit CyclicPoly(Alphabet a) : alpha_(a) {}

    Alphabet alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(canonical_rotation(w));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    CyclicPoly& add_class(const Word& w, const Rational& c) {
        if (c == 0) return *this;
        Word key = canonical_rotation(w);
        if (terms_.empty())
            alpha_ = key.alphabet();
        else
            require_same_alphabet(alpha_, key.alphabet());
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    CyclicPoly& operator+=(const CyclicPoly& q) {
        for (const auto& [w, c] : q.terms_) add_class(w, c);
        return *this;
    }
    CyclicPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend CyclicPoly operator+(CyclicPoly p, const CyclicPoly& q) { return p += q; }
    friend CyclicPoly operator-(CyclicPoly p) {
        for (auto& [w, c] : p.terms_) c = -c;
        return p;
    }
    friend CyclicPoly operator-(CyclicPoly p, const CyclicPoly& q) {
        return p += -q;
    }
    friend CyclicPoly operator*(const Rational& s, CyclicPoly p) { return p *= s; }

    friend bool operator==(const CyclicPoly& p, const CyclicPoly& q) {
        if (p.terms_.empty() && q.terms_.empty()) return true;
        return p.alpha_ == q.alpha_ && p.terms_ == q.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " ";
            s += rational_str(c) + " [" + w.str() + "]";
        }
        return s;
    }

private:
    TermMap terms_;
    Alphabet alpha_ = Alphabet::xy;
};

inline CyclicPoly trace(const Poly& p) {
    CyclicPoly t(p.alphabet());
    for (const auto& [w, c] : p.terms()) t.add_class(w, c);
    return t;
}

// Trace of (x+y)^n - x^n - y^n: every mixed word of degree n contributes 1,
// so a cyclic class of rotation-orbit size s carries coefficient s.
inline CyclicPoly trace_target(int n, Alphabet a = Alphabet::xy) {
    if (n < 2) throw std::invalid_argument("trace target needs degree >= 2");
    if (n > 24) throw std::length_error("trace target degree too large");
    CyclicPoly t(a);
    for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m)
        t.add_class(Word(a, m, n), 1);
    return t;
}

// The scalar s with lhs = s * rhs, when it exists.
inline std::optional<Rational> proportionality(const CyclicPoly& lhs,
                                               const CyclicPoly& rhs) {
    if (rhs.is_zero()) {
        if (lhs.is_zero()) return Rational(0);
        return std::nullopt;
    }
    const auto& [w0, c0] = *rhs.terms().begin();
    Rational s = lhs.coeff(w0) / c0;
    if (lhs == s * rhs) return s;
    return std::nullopt;
}

}  // namespace dskrv
