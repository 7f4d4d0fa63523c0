#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncsym {

// All arithmetic in the library is exact. Rational keeps the canonical form
// (reduced, positive denominator) by construction and streams as "p/q" with
// the denominator omitted when it is 1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Integer int_pow(const Integer& base, int e) {
    Integer r = 1, b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

} // namespace ncsym
