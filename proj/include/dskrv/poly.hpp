#pragma once

#include "dskrv/rational.hpp"
#include "dskrv/word.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace dskrv {

// Sparse noncommutative polynomial with exact rational coefficients.
// Zero coefficients are never stored and all words share one alphabet;
// a polynomial without terms is the zero polynomial. Values are immutable
// in spirit: every operation returns a fresh polynomial.
class Poly {
public:
    using TermMap = std::map<Word, Rational>;

    Poly() = default;
    explicit Poly(Alphabet a) : alpha_(a) {}

    static Poly zero(Alphabet a = Alphabet::xy) { return Poly(a); }

    static Poly one(Alphabet a = Alphabet::xy) {
        return monomial(Word(a));
    }

    static Poly monomial(const Word& w, const Rational& c = Rational(1)) {
        Poly p(w.alphabet());
        p.add_term(w, c);
        return p;
    }

    static Poly generator(Alphabet a, int letter) {
        return monomial(Word(a, static_cast<std::uint64_t>(letter & 1), 1));
    }

    Alphabet alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Accumulates; a zero polynomial adopts the alphabet of the first term.
    Poly& add_term(const Word& w, const Rational& c) {
        if (c == 0) return *this;
        if (terms_.empty())
            alpha_ = w.alphabet();
        else
            require_same_alphabet(alpha_, w.alphabet());
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    Poly& operator+=(const Poly& q) {
        for (const auto& [w, c] : q.terms_) add_term(w, c);
        return *this;
    }
    Poly& operator-=(const Poly& q) {
        for (const auto& [w, c] : q.terms_) add_term(w, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator-(Poly p) {
        for (auto& [w, c] : p.terms_) c = -c;
        return p;
    }
    friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
    friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
    friend Poly operator/(Poly p, const Rational& s) {
        if (s == 0) throw std::invalid_argument("division by zero");
        return p *= Rational(1) / s;
    }

    // Concatenation (ring) product, bilinear over words.
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero()) return p;
        if (q.is_zero()) return q;
        require_same_alphabet(p.alpha_, q.alpha_);
        Poly out(p.alpha_);
        for (const auto& [pw, pc] : p.terms_)
            for (const auto& [qw, qc] : q.terms_)
                out.add_term(concat(pw, qw), pc * qc);
        return out;
    }

    // Structural equality; the two zero polynomials over different
    // alphabets are equal.
    friend bool operator==(const Poly& p, const Poly& q) {
        if (p.terms_.empty() && q.terms_.empty()) return true;
        return p.alpha_ == q.alpha_ && p.terms_ == q.terms_;
    }

private:
    TermMap terms_;
    Alphabet alpha_ = Alphabet::xy;
};

inline int max_degree(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("degree of the zero polynomial");
    return p.terms().rbegin()->first.degree();
}

inline int min_degree(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("degree of the zero polynomial");
    return p.terms().begin()->first.degree();
}

inline bool is_homogeneous(const Poly& p) {
    return p.is_zero() || max_degree(p) == min_degree(p);
}

inline Poly truncate_degree(const Poly& p, int n) {
    Poly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        if (w.degree() > n) break;  // graded order
        out.add_term(w, c);
    }
    return out;
}

inline Poly homogeneous_part(const Poly& p, int n) {
    Poly out(p.alphabet());
    for (const auto& [w, c] : p.terms())
        if (w.degree() == n) out.add_term(w, c);
    return out;
}

inline std::map<int, Poly> graded_parts(const Poly& p) {
    std::map<int, Poly> parts;
    for (const auto& [w, c] : p.terms()) {
        auto [it, ignore] = parts.try_emplace(w.degree(), Poly(p.alphabet()));
        it->second.add_term(w, c);
    }
    return parts;
}

// Grading by depth (number of y's); summing the parts restores p.
inline std::map<int, Poly> depth_parts(const Poly& p) {
    std::map<int, Poly> parts;
    for (const auto& [w, c] : p.terms()) {
        auto [it, ignore] = parts.try_emplace(w.depth(), Poly(p.alphabet()));
        it->second.add_term(w, c);
    }
    return parts;
}

inline int min_depth(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("depth of the zero polynomial");
    int d = Word::max_degree;
    for (const auto& [w, c] : p.terms()) d = std::min(d, w.depth());
    return d;
}

inline Poly reverse(const Poly& p) {
    Poly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) out.add_term(reverse(w), c);
    return out;
}

// The four cofactors of p = before_x * x + before_y * y
//                         = x * after_x + y * after_y.
struct Decomposition {
    Poly before_x, before_y, after_x, after_y;
};

inline Decomposition decompose(const Poly& p) {
    Decomposition d{Poly(p.alphabet()), Poly(p.alphabet()), Poly(p.alphabet()),
                    Poly(p.alphabet())};
    for (const auto& [w, c] : p.terms()) {
        if (w.empty())
            throw std::domain_error("cannot decompose a constant term");
        (w.last() == 0 ? d.before_x : d.before_y).add_term(drop_last(w), c);
        (w.first() == 0 ? d.after_x : d.after_y).add_term(drop_first(w), c);
    }
    return d;
}

// Derivation with dx(x) = 1, dx(y) = 0: every occurrence of x deleted in turn.
inline Poly dx(const Poly& p) {
    Poly out(p.alphabet());
    for (const auto& [w, c] : p.terms())
        for (int i = 0; i < w.degree(); ++i)
            if (w.letter(i) == 0) out.add_term(erase_letter(w, i), c);
    return out;
}

// Derivation with eps(x) = 0, eps(y) = x: every y replaced by x in turn.
inline Poly epsilon(const Poly& p) {
    Poly out(p.alphabet());
    for (const auto& [w, c] : p.terms())
        for (int i = 0; i < w.degree(); ++i)
            if (w.letter(i) == 1) out.add_term(replace_letter(w, i, 0), c);
    return out;
}

// Algebra-morphism extension of x -> img_x, y -> img_y. Both images must be
// free of constant terms so the grading stays bounded below. The images may
// live over a different alphabet than p. With max_deg >= 0 the result is
// truncated to total degree <= max_deg throughout the expansion.
inline Poly substitute(const Poly& p, const Poly& img_x, const Poly& img_y,
                       int max_deg = -1) {
    for (const Poly* img : {&img_x, &img_y})
        if (!img->is_zero() && img->terms().begin()->first.empty())
            throw std::invalid_argument("substitution image has a constant term");
    Alphabet out_a = p.alphabet();
    if (!img_x.is_zero())
        out_a = img_x.alphabet();
    else if (!img_y.is_zero())
        out_a = img_y.alphabet();
    if (!img_x.is_zero() && !img_y.is_zero())
        require_same_alphabet(img_x.alphabet(), img_y.alphabet());

    Poly out(out_a);
    for (const auto& [w, c] : p.terms()) {
        Poly prod = Poly::one(out_a);
        for (int i = 0; i < w.degree() && !prod.is_zero(); ++i) {
            prod = prod * (w.letter(i) ? img_y : img_x);
            if (max_deg >= 0) prod = truncate_degree(prod, max_deg);
        }
        out += c * prod;
    }
    return out;
}

}  // namespace dskrv
