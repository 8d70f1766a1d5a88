#ifndef TORNHEIM_SPECFUN_HPP
#define TORNHEIM_SPECFUN_HPP

#include <vector>

#include "tornheim/rational.hpp"
#include "tornheim/real.hpp"

namespace tornheim::specfun {

// Scalar special functions with tracked absolute error: the gamma family,
// Riemann zeta and its first two derivatives, Hurwitz zeta and its
// z-derivative, Bernoulli numbers/polynomials, harmonic numbers.
//
// Hurwitz zeta and everything derived from it use Euler-Maclaurin: M direct
// terms, the (M+q)^{1-z}/(z-1) + (M+q)^{-z}/2 tail, and Bernoulli
// corrections up to order 2p. z-derivatives differentiate each term
// analytically, so no numerical differentiation enters downstream values.

inline constexpr double euler_gamma = 0.5772156649015328606065120900824024;

double ln_2pi();
double ln_sqrt_2pi();
double zeta_prime0();         // zeta'(0) = -ln sqrt(2 pi)
double const_A();             // A = gamma + ln 2 pi
double const_A_plus();        // A^2 + pi^2/4
double const_A_minus();       // A^2 - pi^2/4

/// Riemann zeta, s > 1. Even integer s is served through the exact
/// Bernoulli-number formula; anything else goes through Euler-Maclaurin.
Real riemann_zeta(double s);

/// order-th derivative of zeta at s > 1, order in {1,2}. Values at integer
/// s are cached after the first computation.
Real riemann_zeta_deriv(double s, int order);

/// Hurwitz zeta zeta(z,q), z != 1, q in (0,1].
Real hurwitz_zeta(double z, double q);

/// d/dz zeta(z,q), z != 1, q in (0,1].
Real hurwitz_zeta_zderiv(double z, double q);

/// ln Gamma(q), q > 0. Stirling series with argument raising.
Real log_gamma(double q);

/// digamma(q) = d/dq ln Gamma(q), q > 0.
Real digamma(double q);

/// Exact Bernoulli number B_n (B_1 = -1/2), n <= 256.
const Rational& bernoulli_number(int n);
double bernoulli_number_d(int n);

/// Bernoulli polynomial B_n(q) = sum_k C(n,k) B_k q^{n-k}.
Real bernoulli_poly(int n, double q);
/// Monomial coefficients of B_n(q), exact, degree-descending Horner order.
const std::vector<Rational>& bernoulli_poly_coeffs(int n);

/// Exact harmonic number H_n (H_0 = 0).
Rational harmonic(int n);
double harmonic_d(int n);
/// h_n = H_{n-1}, n >= 1 (h_1 = 0).
Rational h_shift(int n);
double h_shift_d(int n);

// --- analytic-continuation helpers used across the library ---------------

/// Hurwitz zeta for any q > 0 (the public op restricts q to (0,1]; tail
/// sums over s > S need large q).
Real hurwitz_zeta_ex(double z, double q);
Real hurwitz_zeta_zderiv_ex(double z, double q);

/// zeta(s) for any real s != 1 (negative arguments appear in tail
/// expansions); no precondition beyond the pole.
Real riemann_zeta_ac(double s);

/// digamma for any non-pole real argument (reflection for x <= 0).
double digamma_any(double x);

/// Gamma(x) on the real line away from poles, via reflection for x < 0.
double gamma_real(double x);
/// 1/Gamma(x), entire (returns 0 at the poles of Gamma).
double rgamma_real(double x);

/// sin(pi x), cos(pi x) with exact integer/half-integer behaviour.
double sin_pi(double x);
double cos_pi(double x);

/// zbar(z,q) = zeta(1-z,q) and zbar(z,q) + zbar(z,1-q).
Real zbar(double z, double q);
Real zbar_plus(double z, double q);

} // namespace tornheim::specfun

#endif
