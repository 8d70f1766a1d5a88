#ifndef TORNHEIM_RATIONAL_HPP
#define TORNHEIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace tornheim {

// Exact rational scalar used for Bernoulli numbers, harmonic numbers and
// Bernoulli-basis expansion coefficients. Conversion to double happens only
// at evaluation boundaries.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;
    }
    return b;
}

} // namespace tornheim

#endif
