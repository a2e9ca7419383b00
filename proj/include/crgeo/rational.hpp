// Exact rational scalar type used for polynomial coefficients and Gram matrices.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace crgeo {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial(unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Rational rational_pow(const Rational& base, int e) {
    Rational r = 1;
    Rational b = base;
    int k = e < 0 ? -e : e;
    for (int i = 0; i < k; ++i) r *= b;
    return e < 0 ? Rational(1) / r : r;
}

} // namespace crgeo
