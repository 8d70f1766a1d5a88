#include "tornheim/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tornheim::specfun {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

// Euler-Maclaurin parameters. M direct terms, Bernoulli corrections up to
// order 2*EM_P. Tuned for |z| up to ~15, which covers every index the
// integral catalog and the tail expansions request.
constexpr int EM_M = 32;
constexpr int EM_P = 14;

std::once_flag em_coef_once;
double em_coef[EM_P + 2]; // B_{2j}/(2j)!

void init_em_coef() {
    for (int j = 1; j <= EM_P + 1; ++j) {
        Rational c = bernoulli_number(2 * j) / Rational(factorial_big(2 * j));
        em_coef[j] = to_double(c);
    }
}

struct EmEval {
    double f = 0;    // zeta(z,q)
    double fz = 0;   // d/dz
    double fzz = 0;  // d2/dz2
    double err = 0;
};

// One Euler-Maclaurin pass computing the value and, when order > 0, the
// first `order` z-derivatives term-by-term.
EmEval hurwitz_em(double z, double q, int order) {
    std::call_once(em_coef_once, init_em_coef);
    EmEval r;
    double mag = 0; // running magnitude for the rounding estimate

    for (int n = 0; n < EM_M; ++n) {
        double L = std::log(n + q);
        double f = std::exp(-z * L);
        r.f += f;
        mag += std::fabs(f);
        if (order > 0) r.fz -= L * f;
        if (order > 1) r.fzz += L * L * f;
    }

    double Mq = EM_M + q;
    double L = std::log(Mq);
    double E1 = std::exp((1 - z) * L); // (M+q)^{1-z}
    double g = 1.0 / (z - 1);
    r.f += E1 * g;
    mag += std::fabs(E1 * g);
    if (order > 0) r.fz += -L * E1 * g - E1 * g * g;
    if (order > 1) r.fzz += L * L * E1 * g + 2 * L * E1 * g * g + 2 * E1 * g * g * g;

    double E0 = std::exp(-z * L); // (M+q)^{-z}
    r.f += 0.5 * E0;
    if (order > 0) r.fz -= 0.5 * L * E0;
    if (order > 1) r.fzz += 0.5 * L * L * E0;

    // Bernoulli corrections: B_{2j}/(2j)! * P_j(z) * (M+q)^{-z-2j+1} with
    // P_j(z) = z(z+1)...(z+2j-2). (P, P', P'') are carried as polynomials
    // so zeros of P at negative integer z stay harmless.
    double P = z, Pz = 1, Pzz = 0;
    double Etail = std::exp((-z - 1) * L);
    double last_term = 0;
    for (int j = 1; j <= EM_P; ++j) {
        double c = em_coef[j];
        double t = c * P * Etail;
        r.f += t;
        mag += std::fabs(t);
        last_term = t;
        if (order > 0) r.fz += c * (Pz - P * L) * Etail;
        if (order > 1) r.fzz += c * (Pzz - 2 * Pz * L + P * L * L) * Etail;
        // extend P by the factors (z + 2j-1)(z + 2j), drop (M+q)^{-2}
        double a1 = z + 2 * j - 1;
        Pzz = Pzz * a1 + 2 * Pz;
        Pz = Pz * a1 + P;
        P = P * a1;
        double a2 = z + 2 * j;
        Pzz = Pzz * a2 + 2 * Pz;
        Pz = Pz * a2 + P;
        P = P * a2;
        Etail /= Mq * Mq;
    }
    // remainder bounded by the first omitted correction (real z, 2p+1+z > 0)
    double rem = std::fabs(em_coef[EM_P + 1] * P * Etail);
    r.err = rem + std::fabs(last_term) * 1e-16 +
            std::numeric_limits<double>::epsilon() * mag;
    if (order > 0) r.err *= (1 + std::fabs(L)) * (1 + std::fabs(L));
    return r;
}

std::mutex zeta_deriv_mutex;
std::map<std::pair<int, int>, Real> zeta_deriv_cache; // (s, order) at integer s

std::mutex bern_mutex;
std::vector<Rational> bern_cache; // B_0..B_n

std::mutex bern_poly_mutex;
std::map<int, std::vector<Rational>> bern_poly_cache;
std::map<int, std::vector<double>> bern_poly_cache_d;

std::mutex harmonic_mutex;
std::vector<Rational> harmonic_cache; // H_0..H_n

// Stirling tail coefficients B_{2j}/(2j(2j-1)) for log_gamma.
constexpr int LG_TERMS = 9;
std::once_flag lg_once;
double lg_coef[LG_TERMS + 1];
void init_lg_coef() {
    for (int j = 1; j <= LG_TERMS; ++j)
        lg_coef[j] = to_double(bernoulli_number(2 * j) / Rational(2 * j * (2 * j - 1)));
}

constexpr int DG_TERMS = 8;
std::once_flag dg_once;
double dg_coef[DG_TERMS + 1]; // B_{2j}/(2j)
void init_dg_coef() {
    for (int j = 1; j <= DG_TERMS; ++j)
        dg_coef[j] = to_double(bernoulli_number(2 * j) / Rational(2 * j));
}

} // namespace

double ln_2pi() { return std::log(2 * pi); }
double ln_sqrt_2pi() { return 0.5 * std::log(2 * pi); }
double zeta_prime0() { return -0.5 * std::log(2 * pi); }
double const_A() { return euler_gamma + std::log(2 * pi); }
double const_A_plus() { double A = const_A(); return A * A + pi * pi / 4; }
double const_A_minus() { double A = const_A(); return A * A - pi * pi / 4; }

const Rational& bernoulli_number(int n) {
    if (n < 0) throw std::domain_error("bernoulli_number: n must be >= 0");
    if (n > 256) throw std::domain_error("bernoulli_number: index above cache cap 256");
    std::lock_guard lock(bern_mutex);
    if (bern_cache.empty()) bern_cache.push_back(Rational(1));
    while ((int)bern_cache.size() <= n) {
        int m = (int)bern_cache.size();
        if (m > 1 && m % 2 == 1) {
            bern_cache.push_back(Rational(0));
            continue;
        }
        Rational s = 0;
        for (int k = 0; k < m; ++k)
            s += Rational(binomial_big(m + 1, k)) * bern_cache[k];
        bern_cache.push_back(-s / Rational(m + 1));
    }
    return bern_cache[n];
}

double bernoulli_number_d(int n) { return to_double(bernoulli_number(n)); }

const std::vector<Rational>& bernoulli_poly_coeffs(int n) {
    if (n < 0) throw std::domain_error("bernoulli_poly: n must be >= 0");
    std::lock_guard lock(bern_poly_mutex);
    auto it = bern_poly_cache.find(n);
    if (it == bern_poly_cache.end()) {
        std::vector<Rational> c(n + 1); // c[k] multiplies q^{n-k}
        for (int k = 0; k <= n; ++k)
            c[k] = Rational(binomial_big(n, k)) * bernoulli_number(k);
        it = bern_poly_cache.emplace(n, std::move(c)).first;
        std::vector<double> cd(n + 1);
        for (int k = 0; k <= n; ++k) cd[k] = to_double(it->second[k]);
        bern_poly_cache_d.emplace(n, std::move(cd));
    }
    return it->second;
}

Real bernoulli_poly(int n, double q) {
    bernoulli_poly_coeffs(n);
    const std::vector<double>* cd;
    {
        std::lock_guard lock(bern_poly_mutex);
        cd = &bern_poly_cache_d[n];
    }
    double v = 0, va = 0;
    for (int k = 0; k <= n; ++k) {
        v = v * q + (*cd)[k];
        va = va * std::fabs(q) + std::fabs((*cd)[k]);
    }
    return Real(v, std::numeric_limits<double>::epsilon() * va * (n + 1));
}

Rational harmonic(int n) {
    if (n < 0) throw std::domain_error("harmonic: n must be >= 0");
    std::lock_guard lock(harmonic_mutex);
    if (harmonic_cache.empty()) harmonic_cache.push_back(Rational(0));
    while ((int)harmonic_cache.size() <= n) {
        int m = (int)harmonic_cache.size();
        harmonic_cache.push_back(harmonic_cache.back() + Rational(1, m));
    }
    return harmonic_cache[n];
}

double harmonic_d(int n) { return to_double(harmonic(n)); }

Rational h_shift(int n) {
    if (n < 1) throw std::domain_error("h: n must be >= 1");
    return harmonic(n - 1);
}

double h_shift_d(int n) { return to_double(h_shift(n)); }

Real hurwitz_zeta_ex(double z, double q) {
    if (q <= 0) throw std::domain_error("hurwitz_zeta: q must be positive");
    if (z == 1.0) throw std::domain_error("hurwitz_zeta: pole at z = 1");
    EmEval e = hurwitz_em(z, q, 0);
    return Real(e.f, e.err);
}

Real hurwitz_zeta_zderiv_ex(double z, double q) {
    if (q <= 0) throw std::domain_error("hurwitz_zeta_zderiv: q must be positive");
    if (z == 1.0) throw std::domain_error("hurwitz_zeta_zderiv: pole at z = 1");
    EmEval e = hurwitz_em(z, q, 1);
    return Real(e.fz, e.err);
}

Real hurwitz_zeta(double z, double q) {
    if (!(q > 0) || q > 1)
        throw std::domain_error("hurwitz_zeta: q must lie in (0,1]");
    return hurwitz_zeta_ex(z, q);
}

Real hurwitz_zeta_zderiv(double z, double q) {
    if (!(q > 0) || q > 1)
        throw std::domain_error("hurwitz_zeta_zderiv: q must lie in (0,1]");
    return hurwitz_zeta_zderiv_ex(z, q);
}

Real riemann_zeta(double s) {
    if (!(s > 1)) throw std::domain_error("riemann_zeta: s must be > 1");
    double si = std::round(s);
    if (s == si && (long)si % 2 == 0 && si <= 60) {
        // zeta(2k) = (-1)^{k+1} (2 pi)^{2k} B_{2k} / (2 (2k)!)
        int k = (int)si / 2;
        Rational c = bernoulli_number(2 * k) / Rational(2 * factorial_big(2 * k));
        double v = (k % 2 == 0 ? -1.0 : 1.0) * std::pow(2 * pi, 2.0 * k) * to_double(c);
        return Real(v, 4 * Real::ulp(v));
    }
    return hurwitz_zeta_ex(s, 1.0);
}

Real riemann_zeta_ac(double s) {
    if (s == 1.0) throw std::domain_error("riemann_zeta_ac: pole at s = 1");
    return hurwitz_zeta_ex(s, 1.0);
}

Real riemann_zeta_deriv(double s, int order) {
    if (!(s > 1)) throw std::domain_error("riemann_zeta_deriv: s must be > 1");
    if (order != 1 && order != 2)
        throw std::domain_error("riemann_zeta_deriv: order must be 1 or 2");
    double si = std::round(s);
    bool integral = (s == si);
    if (integral) {
        std::lock_guard lock(zeta_deriv_mutex);
        auto it = zeta_deriv_cache.find({(int)si, order});
        if (it != zeta_deriv_cache.end()) return it->second;
    }
    EmEval e = hurwitz_em(s, 1.0, order);
    Real r(order == 1 ? e.fz : e.fzz, e.err);
    if (integral) {
        std::lock_guard lock(zeta_deriv_mutex);
        zeta_deriv_cache[{(int)si, order}] = r;
    }
    return r;
}

Real log_gamma(double q) {
    if (!(q > 0)) throw std::domain_error("log_gamma: q must be > 0");
    std::call_once(lg_once, init_lg_coef);
    double shift = 0;
    double x = q;
    while (x < 12) {
        shift += std::log(x);
        x += 1;
    }
    double v = (x - 0.5) * std::log(x) - x + 0.5 * std::log(2 * pi);
    double xp = x;
    double last = 0;
    for (int j = 1; j <= LG_TERMS; ++j) {
        last = lg_coef[j] / xp;
        v += last;
        xp *= x * x;
    }
    v -= shift;
    double e = std::fabs(last) * 1e-3 +
               std::numeric_limits<double>::epsilon() * (std::fabs(v) + std::fabs(shift) + x);
    return Real(v, e);
}

Real digamma(double q) {
    if (!(q > 0)) throw std::domain_error("digamma: q must be > 0");
    std::call_once(dg_once, init_dg_coef);
    double shift = 0;
    double x = q;
    while (x < 10) {
        shift += 1.0 / x;
        x += 1;
    }
    double v = std::log(x) - 0.5 / x;
    double x2 = x * x;
    double xp = x2;
    double last = 0;
    for (int j = 1; j <= DG_TERMS; ++j) {
        last = dg_coef[j] / xp;
        v -= last;
        xp *= x2;
    }
    v -= shift;
    double e = std::fabs(last) * 1e-3 +
               std::numeric_limits<double>::epsilon() * (std::fabs(v) + shift + 1);
    return Real(v, e);
}

double digamma_any(double x) {
    if (x > 0) return digamma(x).value;
    if (x == std::floor(x)) throw std::domain_error("digamma_any: pole at nonpositive integer");
    // psi(x) = psi(1-x) - pi cot(pi x)
    return digamma(1 - x).value - pi * cos_pi(x) / sin_pi(x);
}

double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0) r += 2.0;
    if (r < 0.25) return std::sin(pi * r);
    if (r < 0.75) return std::cos(pi * (r - 0.5));
    if (r < 1.25) return -std::sin(pi * (r - 1.0));
    if (r < 1.75) return -std::cos(pi * (r - 1.5));
    return std::sin(pi * (r - 2.0));
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double gamma_real(double x) {
    if (x > 0) return std::exp(log_gamma(x).value);
    if (x == std::floor(x)) throw std::domain_error("gamma_real: pole at nonpositive integer");
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    return pi / (sin_pi(x) * std::exp(log_gamma(1 - x).value));
}

double rgamma_real(double x) {
    if (x > 0) return std::exp(-log_gamma(x).value);
    if (x == std::floor(x)) return 0.0;
    return sin_pi(x) * std::exp(log_gamma(1 - x).value) / pi;
}

Real zbar(double z, double q) { return hurwitz_zeta_ex(1 - z, q); }

Real zbar_plus(double z, double q) {
    return hurwitz_zeta_ex(1 - z, q) + hurwitz_zeta_ex(1 - z, 1 - q);
}

} // namespace tornheim::specfun
