#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace frobgram {

/// Exact integer scalar used everywhere a point count, q^j or Gram entry appears.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Integer ipow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

/// Floor of the square root; n must be nonnegative.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline std::string to_string(const Integer& n) { return n.str(); }

/// "a" for integral values, "a/b" otherwise.
inline std::string to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace frobgram
