#include <cmath>
#include <stdexcept>

#include "tornheim/integrals.hpp"
#include "tornheim/specfun.hpp"
#include "tornheim/tornheim.hpp"

namespace tornheim::sums {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

using quadrature::integral_I;
using quadrature::integral_J;
using quadrature::QuadratureConfig;
using specfun::cos_pi;
using specfun::sin_pi;

double near_integer_distance(double x) { return std::fabs(x - std::round(x)); }

} // namespace

double lambda_factor(double z) {
    if (near_integer_distance(z) < 1e-12 && z >= 1)
        throw std::domain_error("lambda_factor: singular at positive integers");
    return specfun::gamma_real(1 - z) * std::pow(2 * pi, z - 1);
}

double trig_weight_cos(double z) {
    return 2 * specfun::gamma_real(z) * std::pow(2 * pi, -z) * cos_pi(0.5 * z);
}

double trig_weight_sin(double z) {
    return 2 * specfun::gamma_real(z) * std::pow(2 * pi, -z) * sin_pi(0.5 * z);
}

EvalResult tornheim_analytic(double a, double b, double c, const QuadratureConfig& cfg) {
    for (double x : {a, b, c})
        if (near_integer_distance(x) < 0.999e-3)
            throw std::domain_error(
                "tornheim_analytic: parameters within 1e-3 of an integer are rejected "
                "(lambda poles); use the extrapolation harness for limits");
    auto Jcab = integral_J(c, a, b, cfg);
    auto Jcba = integral_J(c, b, a, cfg);
    auto Iabc = integral_I(a, b, c, cfg);
    auto Jabc = integral_J(a, b, c, cfg);
    double pref = 4 * lambda_factor(a) * lambda_factor(b) * lambda_factor(c) * sin_pi(0.5 * c);
    double v = pref * (cos_pi(0.5 * (a - b)) * (Jcab.value + Jcba.value) -
                       cos_pi(0.5 * (a + b)) * (Iabc.value + Jabc.value));
    EvalResult r;
    r.value = v;
    r.err = std::fabs(pref) * (Jcab.err + Jcba.err + Iabc.err + Jabc.err) + 1e-15 * std::fabs(v);
    r.method = Method::analytic_continuation;
    return r;
}

double tornheim_analytic_limit(int n1, int n2, int n3, const QuadratureConfig& cfg) {
    // quadratic Richardson along (n1,n2,n3) + eps (1,1,1); the geometric
    // midpoint keeps the eps1*eps2 quadratic term out of the extrapolant
    const double e0 = 1e-2, e1 = std::pow(10.0, -2.5), e2 = 1e-3;
    double f0 = tornheim_analytic(n1 + e0, n2 + e0, n3 + e0, cfg).value;
    double f1 = tornheim_analytic(n1 + e1, n2 + e1, n3 + e1, cfg).value;
    double f2 = tornheim_analytic(n1 + e2, n2 + e2, n3 + e2, cfg).value;
    return f0 * (e1 * e2) / ((e0 - e1) * (e0 - e2)) +
           f1 * (e0 * e2) / ((e1 - e0) * (e1 - e2)) +
           f2 * (e0 * e1) / ((e2 - e0) * (e2 - e1));
}

EvalResult tornheim_two_int(int n1, int n2, double c, const QuadratureConfig& cfg) {
    if (n1 < 1 || n2 < 1)
        throw std::domain_error("tornheim_two_int: n1, n2 must be positive integers");
    if (near_integer_distance(c) < 1e-9)
        throw std::domain_error("tornheim_two_int: c must not be an integer");

    bool e1 = n1 % 2 == 0, e2 = n2 % 2 == 0;
    if (!e1 && e2) return tornheim_two_int(n2, n1, c, cfg); // symmetry rule

    double n1f = 1, n2f = 1;
    for (int i = 2; i <= n1; ++i) n1f *= i;
    for (int i = 2; i <= n2; ++i) n2f *= i;
    double pref = std::pow(2 * pi, n1 + n2) / (4 * n1f * n2f) * std::pow(2 * pi, c) /
                  (specfun::gamma_real(c) * cos_pi(0.5 * c));

    using specfun::bernoulli_poly;
    auto A = [](int k, double q) { return specfun::hurwitz_zeta_zderiv_ex(1 - k, q).value * k; };
    auto zb = [&](double q) { return specfun::zbar(c, q).value; };
    auto zbp = [&](double q, double qc) {
        return specfun::zbar(c, q).value + specfun::zbar(c, qc).value;
    };

    double bracket, berr;
    if (e1 && e2) {
        auto i1 = quadrature::integrate_01([&](double q) {
            return bernoulli_poly(n1, q).value * bernoulli_poly(n2, q).value * zb(q);
        }, cfg);
        auto i2 = quadrature::integrate_01_sym([&](double q, double qc) {
            return A(n1, q) * A(n2, q) * zbp(q, qc);
        }, cfg);
        auto i3 = quadrature::integrate_01_sym([&](double q, double qc) {
            return A(n1, q) * A(n2, qc) * zbp(q, qc);
        }, cfg);
        double sgn = ((n1 + n2) / 2) % 2 == 0 ? 1.0 : -1.0;
        bracket = sgn * (i1.value - i2.value / (pi * pi) + i3.value / (pi * pi));
        berr = i1.err + (i2.err + i3.err) / (pi * pi);
    } else if (!e1 && !e2) {
        auto i1 = quadrature::integrate_01([&](double q) {
            return bernoulli_poly(n1, q).value * bernoulli_poly(n2, q).value * zb(q);
        }, cfg);
        auto i2 = quadrature::integrate_01_sym([&](double q, double qc) {
            return A(n1, q) * A(n2, q) * zbp(q, qc);
        }, cfg);
        auto i3 = quadrature::integrate_01_sym([&](double q, double qc) {
            return A(n1, q) * A(n2, qc) * zbp(q, qc);
        }, cfg);
        double sgn = ((n1 + n2) / 2) % 2 == 0 ? 1.0 : -1.0;
        bracket = sgn * (i1.value - i2.value / (pi * pi) - i3.value / (pi * pi));
        berr = i1.err + (i2.err + i3.err) / (pi * pi);
    } else {
        // n1 even, n2 odd
        auto i1 = quadrature::integrate_01_sym([&](double q, double qc) {
            return bernoulli_poly(n1, q).value * A(n2, q) * zbp(q, qc);
        }, cfg);
        auto i2 = quadrature::integrate_01_sym([&](double q, double qc) {
            return A(n1, q) * bernoulli_poly(n2, q).value * zbp(q, qc);
        }, cfg);
        double sgn = ((n1 + n2 + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        bracket = sgn * (i1.value + i2.value) / pi;
        berr = (i1.err + i2.err) / pi;
    }

    EvalResult r;
    r.value = pref * bracket;
    r.err = std::fabs(pref) * berr + 1e-15 * std::fabs(r.value);
    r.method = Method::two_integer_limit;
    return r;
}

FourierResiduals fourier_identity_check(double z, double q) {
    if (!(z > 1)) throw std::domain_error("fourier_identity_check: z must be > 1");
    if (!(q > 0) || !(q < 1))
        throw std::domain_error("fourier_identity_check: q must lie in (0,1)");
    double sq = std::fabs(std::sin(pi * q));
    // Dirichlet-test tail bound ~ N^{-z}/|sin(pi q)|
    double N = std::pow(2e13 / sq, 1.0 / z);
    long n_max = (long)std::min(2e7, std::max(1e3, N));
    double cs = 0, sn = 0, cc = 0, sc = 0; // Kahan pairs
    for (long n = 1; n <= n_max; ++n) {
        double w = std::pow((double)n, -z);
        double ang = 2 * pi * (q * n - std::floor(q * n));
        double y1 = std::cos(ang) * w - cc;
        double t1 = cs + y1;
        cc = (t1 - cs) - y1;
        cs = t1;
        double y2 = std::sin(ang) * w - sc;
        double t2 = sn + y2;
        sc = (t2 - sn) - y2;
        sn = t2;
    }
    double tail = 2 * std::pow((double)n_max, -z) / sq;
    FourierResiduals r;
    r.series_tail_bound = tail;
    double zp = specfun::zbar(z, q).value;
    double zm = specfun::zbar(z, 1 - q).value;
    r.cos_residual = 2 * trig_weight_cos(z) * cs - (zp + zm);
    r.sin_residual = 2 * trig_weight_sin(z) * sn - (zp - zm);
    return r;
}

Prop31Residuals prop31_check(double a, double b, double c, const QuadratureConfig& cfg) {
    auto T = [&](double x, double y, double z) {
        return tornheim_direct(ParamTriple(x, y, z)).value;
    };
    double Tabc = T(a, b, c), Tbca = T(b, c, a), Tcab = T(c, a, b);
    double Tsym = Tabc + Tbca + Tcab;
    double Tnsym = -Tabc + Tbca + Tcab;
    double I = integral_I(a, b, c, cfg).value;
    double Jabc = integral_J(a, b, c, cfg).value;
    double Jbca = integral_J(b, c, a, cfg).value;
    double Jcab = integral_J(c, a, b, cfg).value;
    Prop31Residuals r;
    r.sym_residual = trig_weight_cos(a) * trig_weight_cos(b) * trig_weight_cos(c) * Tsym -
                     (I + (Jabc + Jbca + Jcab));
    r.nsym_residual = trig_weight_sin(a) * trig_weight_sin(b) * trig_weight_cos(c) * Tnsym -
                      (I - (-Jabc + Jbca + Jcab));
    return r;
}

double reciprocity_residual(int n1, int n2, int n3, const QuadratureConfig& cfg) {
    if (n1 % 2 || n2 % 2 || n3 % 2)
        throw std::domain_error("reciprocity_residual: all indices must be even");
    auto T = [&](int x, int y, int z) {
        return tornheim_direct(ParamTriple(x, y, z)).value;
    };
    double Tsym = T(n1, n2, n3) + T(n2, n3, n1) + T(n3, n1, n2);
    int alpha = n1 + n2 + n3;
    double fct = 1;
    for (int i = 2; i < n1; ++i) fct *= i;
    for (int i = 2; i < n2; ++i) fct *= i;
    for (int i = 2; i < n3; ++i) fct *= i;
    double sgn = (alpha / 2) % 2 == 0 ? 1.0 : -1.0;
    double rhs = sgn * std::pow(2 * pi, alpha) / (2 * fct) * integral_I(n1, n2, n3, cfg).value;
    return Tsym - rhs;
}

} // namespace tornheim::sums
