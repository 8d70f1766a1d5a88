#ifndef TORNHEIM_REAL_HPP
#define TORNHEIM_REAL_HPP

#include <cmath>
#include <limits>

namespace tornheim {

/// A double together with a nonnegative absolute-error bound.
///
/// Arithmetic propagates the bound monotonically (first-order interval
/// style, plus one ulp of the result so bounds never collapse to zero
/// through rounding). The bound is a working estimate, not a proof.
struct Real {
    double value = 0.0;
    double err = 0.0;

    Real() = default;
    Real(double v) : value(v), err(0.0) {}
    Real(double v, double e) : value(v), err(e < 0 ? -e : e) {}

    static double ulp(double v) {
        return std::numeric_limits<double>::epsilon() * std::fabs(v);
    }

    Real operator-() const { return Real(-value, err); }

    friend Real operator+(const Real& a, const Real& b) {
        double v = a.value + b.value;
        return Real(v, a.err + b.err + ulp(v));
    }
    friend Real operator-(const Real& a, const Real& b) {
        double v = a.value - b.value;
        return Real(v, a.err + b.err + ulp(v));
    }
    friend Real operator*(const Real& a, const Real& b) {
        double v = a.value * b.value;
        double e = std::fabs(a.value) * b.err + std::fabs(b.value) * a.err + a.err * b.err;
        return Real(v, e + ulp(v));
    }
    friend Real operator/(const Real& a, const Real& b) {
        double v = a.value / b.value;
        double e = (a.err + std::fabs(v) * b.err) / std::fabs(b.value);
        return Real(v, e + ulp(v));
    }
    Real& operator+=(const Real& o) { *this = *this + o; return *this; }
    Real& operator-=(const Real& o) { *this = *this - o; return *this; }
    Real& operator*=(const Real& o) { *this = *this * o; return *this; }
};

inline Real scale(const Real& a, double c) {
    return Real(a.value * c, a.err * std::fabs(c) + Real::ulp(a.value * c));
}

} // namespace tornheim

#endif
