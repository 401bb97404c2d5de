#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace dskrv {

using Integer = boost::multiprecision::cpp_int;

// Exact rational coefficients. cpp_rational keeps values in lowest terms
// with a positive denominator, so zero is always 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(std::move(num), std::move(den));
}

// "p/q" even when q == 1, so serialized output parses back uniformly.
inline std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace dskrv
