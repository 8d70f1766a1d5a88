#include "tornheim/integrals.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "tornheim/negapolygamma.hpp"
#include "tornheim/specfun.hpp"

namespace tornheim::quadrature {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

using specfun::bernoulli_poly;
using specfun::log_gamma;
using negapoly::negapolygamma;

double lnsin_pi(double q, double qc) {
    // sin(pi q) = sin(pi min(q, 1-q)) exactly
    double m = std::min(q, qc);
    return std::log(std::sin(pi * m));
}

std::mutex catalog_mutex;
std::map<std::tuple<Family, int, int>, CatalogValue> catalog_cache;

void require_pos_pair(int m, int n, const char* who) {
    if (m < 1 || n < 1) throw std::domain_error(std::string(who) + ": indices must be >= 1");
}

} // namespace

QuadratureConfig catalog_config() {
    QuadratureConfig cfg;
    cfg.target_tol = 1e-12;
    cfg.max_levels = 12;
    return cfg;
}

int IntegralId::arity() const {
    switch (family) {
        case Family::I:
        case Family::J:
            return 3;
        default:
            return 2;
    }
}

void IntegralId::validate() const {
    bool integral_indices = true;
    switch (family) {
        case Family::I:
        case Family::J:
        case Family::TwoZetaSame:
        case Family::TwoZetaReflected:
            integral_indices = false;
            break;
        default:
            break;
    }
    for (int i = 0; i < arity(); ++i) {
        double v = idx[(std::size_t)i];
        if (integral_indices && (v != std::floor(v) || v < 1))
            throw std::domain_error("IntegralId: indices must be positive integers for " + name());
    }
}

std::string IntegralId::name() const {
    static const char* names[] = {"I",      "J", "N", "M", "M*", "K",
                                  "K*",     "Z", "Z*", "U", "two_zeta",
                                  "two_zeta_reflected"};
    return names[(int)family];
}

QuadResult integral_I(double a, double b, double c, const QuadratureConfig& cfg) {
    if (a == 0 || b == 0 || c == 0)
        throw std::domain_error("integral_I: parameters must be nonzero");
    return integrate_01([=](double q) {
        return specfun::zbar(a, q).value * specfun::zbar(b, q).value *
               specfun::zbar(c, q).value;
    }, cfg);
}

QuadResult integral_J(double a, double b, double c, const QuadratureConfig& cfg) {
    if (a == 0 || b == 0 || c == 0)
        throw std::domain_error("integral_J: parameters must be nonzero");
    return integrate_01_sym([=](double q, double qc) {
        return specfun::zbar(a, q).value * specfun::zbar(b, q).value *
               specfun::zbar(c, qc).value;
    }, cfg);
}

Real integral_N(int m, int n) {
    require_pos_pair(m, n, "integral_N");
    // N_{m,n} = 2 n!/(2pi)^{m+n} [ pi/2 zeta(m+n) sin(pi(n-m)/2)
    //           - (A zeta(m+n) - zeta'(m+n)) cos(pi(n-m)/2) ]
    int mn = m + n;
    double nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    Real z = specfun::riemann_zeta(mn);
    Real zp = specfun::riemann_zeta_deriv(mn, 1);
    double A = specfun::const_A();
    double s = specfun::sin_pi(0.5 * (n - m));
    double co = specfun::cos_pi(0.5 * (n - m));
    Real bracket = scale(z, pi / 2 * s) - scale(scale(z, A) - zp, co);
    return scale(bracket, 2 * nfact * std::pow(2 * pi, -mn));
}

Real integral_M(int k, int kp) {
    require_pos_pair(k, kp, "integral_M");
    int kplus = k + kp;
    Real z = specfun::riemann_zeta(kplus);
    Real zp = specfun::riemann_zeta_deriv(kplus, 1);
    Real zpp = specfun::riemann_zeta_deriv(kplus, 2);
    double A = specfun::const_A();
    Real bracket = scale(z, specfun::const_A_plus()) - scale(zp, 2 * A) + zpp;
    double co = specfun::cos_pi(0.5 * (k - kp));
    return scale(bracket, 2 * std::pow(2 * pi, -kplus) * co);
}

Real integral_Mstar(int k, int kp) {
    require_pos_pair(k, kp, "integral_Mstar");
    int kplus = k + kp;
    Real z = specfun::riemann_zeta(kplus);
    Real zp = specfun::riemann_zeta_deriv(kplus, 1);
    Real zpp = specfun::riemann_zeta_deriv(kplus, 2);
    double A = specfun::const_A();
    Real br1 = scale(z, specfun::const_A_minus()) - scale(zp, 2 * A) + zpp;
    Real br2 = scale(z, A) - zp;
    double cp = specfun::cos_pi(0.5 * kplus);
    double sp = specfun::sin_pi(0.5 * kplus);
    return scale(scale(br1, cp) + scale(br2, pi * sp), 2 * std::pow(2 * pi, -kplus));
}

QuadResult integral_N_quad(int m, int n, const QuadratureConfig& cfg) {
    require_pos_pair(m, n, "integral_N_quad");
    return integrate_01([=](double q) {
        return negapolygamma(m, q).value * bernoulli_poly(n, q).value;
    }, cfg);
}

QuadResult integral_M_quad(int k, int kp, const QuadratureConfig& cfg) {
    require_pos_pair(k, kp, "integral_M_quad");
    return integrate_01([=](double q) {
        return negapolygamma(k, q).value * negapolygamma(kp, q).value;
    }, cfg);
}

QuadResult integral_Mstar_quad(int k, int kp, const QuadratureConfig& cfg) {
    require_pos_pair(k, kp, "integral_Mstar_quad");
    return integrate_01_sym([=](double q, double qc) {
        return negapolygamma(k, q).value * negapolygamma(kp, qc).value;
    }, cfg);
}

QuadResult integral_K(int m, int n, const QuadratureConfig& cfg) {
    require_pos_pair(m, n, "integral_K");
    return integrate_01([=](double q) {
        return negapolygamma(m, q).value * bernoulli_poly(n, q).value * log_gamma(q).value;
    }, cfg);
}

QuadResult integral_Kstar(int m, int n, const QuadratureConfig& cfg) {
    require_pos_pair(m, n, "integral_Kstar");
    return integrate_01_sym([=](double q, double qc) {
        return negapolygamma(m, qc).value * bernoulli_poly(n, q).value * log_gamma(q).value;
    }, cfg);
}

QuadResult integral_Z(int m, int n, const QuadratureConfig& cfg) {
    require_pos_pair(m, n, "integral_Z");
    return integrate_01([=](double q) {
        return negapolygamma(m, q).value * negapolygamma(n, q).value * log_gamma(q).value;
    }, cfg);
}

QuadResult integral_Zstar(int m, int n, const QuadratureConfig& cfg) {
    require_pos_pair(m, n, "integral_Zstar");
    return integrate_01_sym([=](double q, double qc) {
        return negapolygamma(m, q).value * negapolygamma(n, qc).value * log_gamma(q).value;
    }, cfg);
}

QuadResult integral_U(int m, int n, const QuadratureConfig& cfg) {
    require_pos_pair(m, n, "integral_U");
    return integrate_01_sym([=](double q, double qc) {
        return negapolygamma(m, q).value * bernoulli_poly(n, q).value * lnsin_pi(q, qc);
    }, cfg);
}

CatalogValue catalog(Family f, int m, int n) {
    {
        std::lock_guard lock(catalog_mutex);
        auto it = catalog_cache.find({f, m, n});
        if (it != catalog_cache.end()) return it->second;
    }
    CatalogValue v;
    switch (f) {
        case Family::N: {
            Real r = integral_N(m, n);
            v = {r.value, r.err, false};
            break;
        }
        case Family::M: {
            Real r = integral_M(m, n);
            v = {r.value, r.err, false};
            break;
        }
        case Family::Mstar: {
            Real r = integral_Mstar(m, n);
            v = {r.value, r.err, false};
            break;
        }
        case Family::K: {
            QuadResult r = integral_K(m, n);
            v = {r.value, r.err, true};
            break;
        }
        case Family::Kstar: {
            QuadResult r = integral_Kstar(m, n);
            v = {r.value, r.err, true};
            break;
        }
        case Family::Z: {
            QuadResult r = integral_Z(m, n);
            v = {r.value, r.err, true};
            break;
        }
        case Family::Zstar: {
            QuadResult r = integral_Zstar(m, n);
            v = {r.value, r.err, true};
            break;
        }
        case Family::U: {
            QuadResult r = integral_U(m, n);
            v = {r.value, r.err, true};
            break;
        }
        default:
            throw std::invalid_argument("catalog: family is not two-index cached");
    }
    std::lock_guard lock(catalog_mutex);
    catalog_cache[{f, m, n}] = v;
    return v;
}

Real two_zeta_closed(double a, double b, bool reflected) {
    if (!(a > 1) || !(b > 1))
        throw std::domain_error("two_zeta: a and b must be > 1");
    Real z = specfun::riemann_zeta(a + b);
    double g = std::exp(specfun::log_gamma(a).value + specfun::log_gamma(b).value);
    double co = specfun::cos_pi(0.5 * (reflected ? a + b : a - b));
    return scale(z, 2 * g * std::pow(2 * pi, -(a + b)) * co);
}

QuadResult two_zeta_quad(double a, double b, bool reflected, const QuadratureConfig& cfg) {
    if (!(a > 1) || !(b > 1))
        throw std::domain_error("two_zeta: a and b must be > 1");
    if (reflected) {
        return integrate_01_sym([=](double q, double qc) {
            return specfun::zbar(a, q).value * specfun::zbar(b, qc).value;
        }, cfg);
    }
    return integrate_01([=](double q) {
        return specfun::zbar(a, q).value * specfun::zbar(b, q).value;
    }, cfg);
}

LogGammaMoments loggamma_moments_check(const QuadratureConfig& cfg) {
    LogGammaMoments m{};
    QuadResult l1 = integrate_01([](double q) { return log_gamma(q).value; }, cfg);
    m.L1_quad = l1.value;
    m.L1_closed = specfun::ln_sqrt_2pi();
    m.L1_residual = m.L1_quad - m.L1_closed;

    QuadResult l2 = integrate_01([](double q) {
        double v = log_gamma(q).value;
        return v * v;
    }, cfg);
    m.L2_quad = l2.value;
    double g = specfun::euler_gamma;
    double L1 = m.L1_closed;
    double A = specfun::const_A();
    double zp2 = specfun::riemann_zeta_deriv(2, 1).value;
    double zpp2 = specfun::riemann_zeta_deriv(2, 2).value;
    m.L2_closed = g * g / 12 + pi * pi / 48 + g * L1 / 3 + 4.0 / 3 * L1 * L1 -
                  A * zp2 / (pi * pi) + zpp2 / (2 * pi * pi);
    m.L2_residual = m.L2_quad - m.L2_closed;

    QuadResult l3 = integrate_01([](double q) {
        double v = log_gamma(q).value;
        return v * v * v;
    }, cfg);
    m.L3_quad = l3.value;
    m.L3_err = l3.err;
    return m;
}

CatalogValue evaluate(const IntegralId& id, const QuadratureConfig& cfg) {
    id.validate();
    auto quad = [](const QuadResult& r) { return CatalogValue{r.value, r.err, true}; };
    switch (id.family) {
        case Family::I:
            return quad(integral_I(id.idx[0], id.idx[1], id.idx[2], cfg));
        case Family::J:
            return quad(integral_J(id.idx[0], id.idx[1], id.idx[2], cfg));
        case Family::TwoZetaSame: {
            Real r = two_zeta_closed(id.idx[0], id.idx[1], false);
            return {r.value, r.err, false};
        }
        case Family::TwoZetaReflected: {
            Real r = two_zeta_closed(id.idx[0], id.idx[1], true);
            return {r.value, r.err, false};
        }
        default:
            return catalog(id.family, (int)id.idx[0], (int)id.idx[1]);
    }
}

} // namespace tornheim::quadrature
