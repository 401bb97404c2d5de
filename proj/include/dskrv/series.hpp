#pragma once

#include "dskrv/lie.hpp"
#include "dskrv/poly.hpp"
#include "dskrv/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace dskrv {

namespace detail {
inline Integer binomial_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}
}  // namespace detail

// B_0, ..., B_k in the convention of x/(e^x - 1), so B_1 = -1/2. Computed
// from the recurrence sum_{j<=m} C(m+1, j) B_j = 0 for m >= 1.
inline std::vector<Rational> bernoulli_list(int k) {
    if (k < 0) throw std::invalid_argument("negative Bernoulli index");
    std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j)
            s += Rational(detail::binomial_int(m + 1, j)) * b[j];
        b[m] = -s / Rational(m + 1);
    }
    return b;
}

inline Rational bernoulli(int k) { return bernoulli_list(k).back(); }

// sum_{k>=0} (B_k / k!) ad(base)^k (arg), truncated to total degree
// <= max_deg. base and arg must be Lie elements and the truncation must not
// cut below the argument itself.
inline Poly ber(const Poly& base, const Poly& arg, int max_deg) {
    if (!arg.is_zero() && max_deg < max_degree(arg))
        throw std::invalid_argument("truncation below argument degree");
    if (!is_lie(base) || !is_lie(arg))
        throw std::invalid_argument("ber needs Lie arguments");
    const std::vector<Rational> b = bernoulli_list(max_deg);
    Poly result = truncate_degree(arg, max_deg);
    Poly term = result;
    Integer kfact = 1;
    for (int k = 1; k <= max_deg && !term.is_zero(); ++k) {
        term = truncate_degree(lie_bracket(base, term), max_deg);
        if (term.is_zero()) break;
        kfact *= k;
        if (b[k] != 0) result += (b[k] / Rational(kfact)) * term;
    }
    return result;
}

// The elements t01 = Ber_b(-a), t02 = Ber_{-b}(a), t12 = [a,b] over {a,b},
// truncated at max_deg. Their sum vanishes identically: the odd Bernoulli
// numbers beyond B_1 are zero.
struct TElements {
    Poly t01, t02, t12;
};

inline TElements t_elements(int max_deg) {
    if (max_deg < 2) throw std::invalid_argument("truncation degree must be >= 2");
    const Poly a = Poly::generator(Alphabet::ab, 0);
    const Poly b = Poly::generator(Alphabet::ab, 1);
    return {ber(b, -a, max_deg), ber(-b, a, max_deg), lie_bracket(a, b)};
}

// Lie embedding x -> t01, y -> t02 (which carries -x-y to t12), computed
// through total degree max_deg.
inline Poly embed(const Poly& p, int max_deg) {
    if (p.is_zero()) return Poly(Alphabet::ab);
    if (max_deg < max_degree(p))
        throw std::invalid_argument("truncation below polynomial degree");
    if (!is_lie(p)) throw std::invalid_argument("embed needs a Lie element");
    const TElements t = t_elements(std::max(max_deg, 2));
    return substitute(p, truncate_degree(t.t01, max_deg),
                      truncate_degree(t.t02, max_deg), max_deg);
}

}  // namespace dskrv
