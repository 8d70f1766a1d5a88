#include "tornheim/qr_integrals.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "tornheim/bernoulli_algebra.hpp"
#include "tornheim/integrals.hpp"
#include "tornheim/specfun.hpp"

namespace tornheim::sums {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

using quadrature::catalog;
using quadrature::Family;
using specfun::h_shift_d;

struct VE {
    double v = 0, e = 0;
    VE operator+(const VE& o) const { return {v + o.v, e + o.e}; }
    VE operator-(const VE& o) const { return {v - o.v, e + o.e}; }
    VE scaled(double c) const { return {v * c, e * std::fabs(c)}; }
};

double fact_d(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_pos(int n1, int n2, int n3, const char* who) {
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw std::domain_error(std::string(who) + ": indices must be >= 1");
}

VE cat(Family f, int m, int n) {
    auto c = catalog(f, m, n);
    return {c.value, c.err};
}

// Q3(1,m,n) = K_{m,n} + zeta'(0) N_{m,n}, and the analogous n1 = 1 bases
// for Q4..Q6 via psi^{(-1)} = ln Gamma + zeta'(0).
VE q_base(int j, int m, int n) {
    double zp0 = specfun::zeta_prime0();
    switch (j) {
        case 3: return cat(Family::K, m, n) + cat(Family::N, m, n).scaled(zp0);
        case 4: {
            double sgn = (n % 2 == 0) ? 1.0 : -1.0;
            return cat(Family::Kstar, m, n) + cat(Family::N, m, n).scaled(zp0 * sgn);
        }
        case 5: return cat(Family::Z, m, n) + cat(Family::M, m, n).scaled(zp0);
        case 6: return cat(Family::Zstar, m, n) + cat(Family::Mstar, m, n).scaled(zp0);
        default: throw std::logic_error("q_base: j out of range");
    }
}

using Key = std::tuple<int, int, int, int>;

VE q_eval(int j, int n1, int n2, int n3, std::map<Key, VE>& memo);

VE q_recurse(int j, int n1, int n2, int n3, std::map<Key, VE>& memo) {
    // all four recurrences lower n1 or n2 and raise n3
    VE l = q_eval(j, n1 - 1, n2, n3 + 1, memo);
    VE r = q_eval(j, n1, n2 - 1, n3 + 1, memo);
    switch (j) {
        case 3: return (l + r).scaled(-1.0 / (n3 + 1));
        case 4: return (r - l).scaled(1.0 / (n3 + 1));
        case 5: return (l + r).scaled(-1.0);
        case 6: return l + r;
        default: throw std::logic_error("q_recurse: j out of range");
    }
}

VE q_eval(int j, int n1, int n2, int n3, std::map<Key, VE>& memo) {
    Key k{j, n1, n2, n3};
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    VE r;
    if (n1 == 1) {
        r = q_base(j, n2, n3);
    } else if (n2 == 1) {
        // first-two-argument symmetry; Q4 flips sign with odd n3
        r = q_base(j, n1, n3);
        if (j == 4 && n3 % 2 == 1) r = r.scaled(-1.0);
    } else {
        r = q_recurse(j, n1, n2, n3, memo);
    }
    memo.emplace(k, r);
    return r;
}

VE q_ve(int j, int n1, int n2, int n3) {
    switch (j) {
        case 1: {
            double v = to_double(bernoulli::integral_BBB(n1, n2, n3));
            return {v, 2 * std::numeric_limits<double>::epsilon() * std::fabs(v)};
        }
        case 2: {
            EvalResult r = q2_closed(n1, n2, n3);
            return {r.value, r.err};
        }
        case 3:
        case 4:
        case 5:
        case 6: {
            std::map<Key, VE> memo;
            return q_eval(j, n1, n2, n3, memo);
        }
        default:
            throw std::domain_error("q_integral: j must lie in 1..6");
    }
}

VE r_ve(int j, int n1, int n2, int n3) {
    double f1 = fact_d(n1), f2 = fact_d(n2), f3 = fact_d(n3);
    double h1 = h_shift_d(n1), h2 = h_shift_d(n2), h3 = h_shift_d(n3);
    auto Q = q_ve;
    switch (j) {
        case 1:
            return Q(1, n1, n2, n3);
        case 2:
            return (Q(2, n1, n2, n3).scaled(f3) + Q(1, n1, n2, n3).scaled(h3)).scaled(1 / pi);
        case 3:
            return (Q(3, n1, n2, n3).scaled(f1 * f2) + Q(2, n1, n3, n2).scaled(f2 * h1) +
                    Q(2, n2, n3, n1).scaled(f1 * h2) + Q(1, n1, n2, n3).scaled(h1 * h2))
                .scaled(1 / (pi * pi));
        case 4: {
            double s2 = (n2 % 2 == 0) ? 1.0 : -1.0;
            double s13 = ((n1 + n3) % 2 == 0) ? 1.0 : -1.0;
            return (Q(4, n1, n2, n3).scaled(f1 * f2) + Q(2, n2, n3, n1).scaled(s2 * f1 * h2) +
                    Q(2, n1, n3, n2).scaled(s13 * f2 * h1) +
                    Q(1, n1, n2, n3).scaled(s2 * h1 * h2))
                .scaled(1 / (pi * pi));
        }
        case 5:
            return (Q(5, n1, n2, n3).scaled(f1 * f2 * f3) + Q(3, n1, n2, n3).scaled(f1 * f2 * h3) +
                    Q(3, n1, n3, n2).scaled(f1 * f3 * h2) + Q(3, n2, n3, n1).scaled(f2 * f3 * h1) +
                    Q(2, n2, n3, n1).scaled(f1 * h2 * h3) + Q(2, n1, n3, n2).scaled(f2 * h1 * h3) +
                    Q(2, n1, n2, n3).scaled(f3 * h1 * h2) +
                    Q(1, n1, n2, n3).scaled(h1 * h2 * h3))
                .scaled(1 / (pi * pi * pi));
        case 6: {
            double s3 = (n3 % 2 == 0) ? 1.0 : -1.0;
            double s12 = ((n1 + n2) % 2 == 0) ? 1.0 : -1.0;
            return (Q(6, n1, n2, n3).scaled(f1 * f2 * f3) +
                    Q(3, n1, n2, n3).scaled(s3 * f1 * f2 * h3) +
                    Q(4, n1, n3, n2).scaled(f1 * f3 * h2) + Q(4, n2, n3, n1).scaled(f2 * f3 * h1) +
                    Q(2, n2, n3, n1).scaled(s3 * f1 * h2 * h3) +
                    Q(2, n1, n3, n2).scaled(s3 * f2 * h1 * h3) +
                    Q(2, n1, n2, n3).scaled(s12 * f3 * h1 * h2) +
                    Q(1, n1, n2, n3).scaled(s3 * h1 * h2 * h3))
                .scaled(1 / (pi * pi * pi));
        }
        default:
            throw std::domain_error("r_integral: j must lie in 1..6");
    }
}

} // namespace

int parity_sign(int n) {
    int k = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    return k % 2 == 0 ? 1 : -1;
}

EvalResult q2_closed(int n1, int n2, int n3) {
    require_pos(n1, n2, n3, "q2_closed");
    int alpha = n1 + n2 + n3;
    int kmax = std::max(n1 / 2, n2 / 2);
    double sa = specfun::sin_pi(0.5 * alpha); // exact 0 / +-1 at integers
    double ca = specfun::cos_pi(0.5 * alpha);
    double A = specfun::const_A();
    double s = 0, err = 0;
    for (int k = 0; k <= kmax; ++k) {
        double w = n1 * binomial_big(n2, 2 * k).convert_to<double>() +
                   n2 * binomial_big(n1, 2 * k).convert_to<double>();
        if (w == 0) continue;
        int m = alpha - 2 * k;
        double z = specfun::riemann_zeta(m).value;
        double term = pi / 2 * sa * z;
        if (ca != 0) {
            double zp = specfun::riemann_zeta_deriv(m, 1).value;
            term -= ca * (A * z - zp);
        }
        double coef = fact_d(n1 + n2 - 2 * k - 1) * std::pow(2 * pi, -(double)m) *
                      (k % 2 == 0 ? 1.0 : -1.0) * specfun::bernoulli_number_d(2 * k);
        s += w * coef * term;
        err += std::fabs(w * coef * term) * 1e-15;
    }
    EvalResult r;
    r.value = 2.0 * (n3 % 2 == 0 ? 1.0 : -1.0) * s;
    r.err = 2 * err + 1e-16 * std::fabs(r.value);
    r.method = Method::integer_assembly;
    return r;
}

EvalResult q_integral(int j, int n1, int n2, int n3) {
    require_pos(n1, n2, n3, "q_integral");
    VE v = q_ve(j, n1, n2, n3);
    return {v.v, v.e, Method::integer_assembly};
}

EvalResult r_integral(int j, int n1, int n2, int n3) {
    require_pos(n1, n2, n3, "r_integral");
    VE v = r_ve(j, n1, n2, n3);
    return {v.v, v.e, Method::integer_assembly};
}

EvalResult tornheim_integer(int n1, int n2, int n3) {
    require_pos(n1, n2, n3, "tornheim_integer");
    ParamTriple(n1, n2, n3).require_gate("tornheim_integer");

    bool e1 = n1 % 2 == 0, e2 = n2 % 2 == 0, e3 = n3 % 2 == 0;
    if (!e1 && e2) return tornheim_integer(n2, n1, n3); // symmetry rule first

    VE tr;
    if (e1 && e2 && e3) { // case 1
        tr = r_ve(3, n1, n2, n3) - r_ve(4, n1, n2, n3) - r_ve(1, n1, n2, n3).scaled(0.5);
    } else if (e1 && e2 && !e3) { // case 2
        tr = r_ve(5, n1, n2, n3) - r_ve(2, n1, n2, n3) + r_ve(6, n1, n2, n3) -
             r_ve(6, n3, n1, n2) - r_ve(6, n3, n2, n1);
    } else if (e1 && !e2 && e3) { // case 3
        tr = (r_ve(2, n3, n1, n2) + r_ve(2, n3, n2, n1)).scaled(-1.0);
    } else if (e1 && !e2 && !e3) { // case 4
        tr = r_ve(3, n3, n1, n2) + r_ve(3, n3, n2, n1) + r_ve(4, n1, n3, n2) +
             r_ve(4, n2, n3, n1);
    } else if (!e1 && !e2 && e3) { // case 5
        tr = r_ve(3, n1, n2, n3) + r_ve(4, n1, n2, n3) - r_ve(1, n1, n2, n3).scaled(0.5);
    } else { // case 6
        tr = r_ve(5, n1, n2, n3) - r_ve(2, n1, n2, n3) + r_ve(6, n1, n2, n3) +
             r_ve(6, n3, n1, n2) + r_ve(6, n3, n2, n1);
    }

    int alpha = n1 + n2 + n3;
    double pref = parity_sign(alpha) * std::pow(2 * pi, alpha) /
                  (2 * fact_d(n1) * fact_d(n2) * fact_d(n3));
    EvalResult r;
    r.value = pref * tr.v;
    r.err = std::fabs(pref) * tr.e + 1e-15 * std::fabs(r.value);
    r.method = Method::integer_assembly;
    return r;
}

} // namespace tornheim::sums
