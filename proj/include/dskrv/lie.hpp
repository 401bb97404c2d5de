#pragma once

#include "dskrv/poly.hpp"
#include "dskrv/word.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dskrv {

inline Poly lie_bracket(const Poly& p, const Poly& q) {
    return p * q - q * p;
}

// Left-normed bracketing map: a1 a2 ... an -> [[...[a1,a2],...],an],
// extended linearly. On a homogeneous Lie element of degree n it acts as
// multiplication by n (Dynkin-Specht-Wever).
inline Poly dynkin(const Poly& p) {
    Poly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) continue;
        Poly b = Poly::monomial(prefix(w, 1));
        for (int i = 1; i < w.degree(); ++i) {
            Poly li = Poly::monomial(
                Word(w.alphabet(), static_cast<std::uint64_t>(w.letter(i)), 1));
            b = b * li - li * b;
        }
        out += c * b;
    }
    return out;
}

// Dynkin criterion, checked per degree-graded piece.
inline bool is_lie(const Poly& p) {
    if (p.is_zero()) return true;
    for (const auto& [n, part] : graded_parts(p)) {
        if (n == 0) return false;
        if (dynkin(part) != Rational(n) * part) return false;
    }
    return true;
}

// All Lyndon words of the given degree over a two-letter alphabet, in
// lexicographic order (Duval's generation).
inline std::vector<Word> lyndon_words(int n, Alphabet a = Alphabet::xy) {
    if (n < 1) throw std::invalid_argument("lyndon words need degree >= 1");
    if (n > Word::max_degree) throw std::length_error("degree too large");
    std::vector<Word> out;
    std::vector<int> t{0};
    while (!t.empty()) {
        if (static_cast<int>(t.size()) == n) {
            Word w(a);
            for (int l : t) w = appended(w, l);
            out.push_back(w);
        }
        const std::size_t m = t.size();
        t.resize(static_cast<std::size_t>(n));
        for (std::size_t i = m; i < t.size(); ++i) t[i] = t[i % m];
        while (!t.empty() && t.back() == 1) t.pop_back();
        if (!t.empty()) ++t.back();
    }
    return out;
}

// Standard (right) factorization of a Lyndon word of degree >= 2: the right
// factor is the lexicographically smallest proper suffix, which is the
// longest proper Lyndon suffix.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
    const int n = w.degree();
    if (n < 2) throw std::invalid_argument("factorization needs degree >= 2");
    int split = 1;
    Word best = suffix(w, n - 1);
    for (int i = 2; i < n; ++i) {
        Word cand = suffix(w, n - i);
        if (lex_less(cand, best)) {
            best = cand;
            split = i;
        }
    }
    return {prefix(w, split), best};
}

namespace detail {
inline Poly lyndon_expansion(const Word& w, std::map<Word, Poly>& cache) {
    if (auto it = cache.find(w); it != cache.end()) return it->second;
    Poly e;
    if (w.degree() == 1) {
        e = Poly::monomial(w);
    } else {
        auto [u, v] = standard_factorization(w);
        e = lie_bracket(lyndon_expansion(u, cache), lyndon_expansion(v, cache));
    }
    cache.emplace(w, e);
    return e;
}
}  // namespace detail

struct LyndonBasisElement {
    Word word;
    Word left, right;  // standard factorization; empty for degree 1
    Poly expansion;    // the bracketed word expanded in the free algebra
};

// Homogeneous basis of the degree-n piece of the free Lie algebra, indexed
// by Lyndon words with their standard bracketings.
struct LyndonBasis {
    int degree = 0;
    std::vector<LyndonBasisElement> elements;
    std::size_t size() const { return elements.size(); }
};

inline LyndonBasis lyndon_basis(int n, Alphabet a = Alphabet::xy) {
    LyndonBasis basis;
    basis.degree = n;
    std::map<Word, Poly> cache;
    for (const Word& w : lyndon_words(n, a)) {
        LyndonBasisElement e;
        e.word = w;
        if (n >= 2) {
            auto [u, v] = standard_factorization(w);
            e.left = u;
            e.right = v;
        }
        e.expansion = detail::lyndon_expansion(w, cache);
        basis.elements.push_back(std::move(e));
    }
    return basis;
}

// Nested-bracket rendering of a Lyndon word, e.g. xxy -> [x,[x,y]].
inline std::string bracket_string(const Word& w) {
    if (w.degree() == 0) return "1";
    if (w.degree() == 1) return std::string(1, letter_char(w.alphabet(), w.first()));
    auto [u, v] = standard_factorization(w);
    return "[" + bracket_string(u) + "," + bracket_string(v) + "]";
}

// Dimension of the degree-n piece of the free Lie algebra on two
// generators: (1/n) sum over d | n of mu(d) 2^{n/d}.
inline long long witt_number(int n) {
    if (n < 1) throw std::invalid_argument("witt number needs n >= 1");
    auto mobius = [](int m) {
        int mu = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                mu = -mu;
            }
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    long long total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        total += mu * (1LL << (n / d));
    }
    return total / n;
}

}  // namespace dskrv
