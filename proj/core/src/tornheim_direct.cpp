#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tornheim/specfun.hpp"
#include "tornheim/tornheim.hpp"

namespace tornheim::sums {

namespace {

using specfun::bernoulli_number_d;
using specfun::hurwitz_zeta_ex;
using specfun::hurwitz_zeta_zderiv_ex;
using specfun::riemann_zeta_ac;

constexpr double int_snap = 1e-12; // parameters this close to an integer are treated as exact

struct Kahan {
    double s = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

double binom_d(int n, int k) {
    if (k < 0 || k > n) return 0;
    double b = 1;
    for (int i = 1; i <= std::min(k, n - k); ++i) b = b * (n - std::min(k, n - k) + i) / i;
    return b;
}

// sum_{s>S} H^{(i)}_{s-1} s^{-x}, from the Euler-Maclaurin expansion of the
// inner harmonic number, reduced to Hurwitz zeta values at (., S+1).
// For i = 1 the log term becomes the z-derivative of Hurwitz zeta.
double sigma_tail(int i, double x, int S, double& err) {
    const double q = S + 1;
    const int KEM = 6;
    if (i == 1) {
        double r = -hurwitz_zeta_zderiv_ex(x, q).value +
                   specfun::euler_gamma * hurwitz_zeta_ex(x, q).value -
                   0.5 * hurwitz_zeta_ex(x + 1, q).value;
        double term = 0;
        for (int k = 1; k <= KEM; ++k) {
            term = bernoulli_number_d(2 * k) / (2 * k) * hurwitz_zeta_ex(x + 2 * k, q).value;
            r -= term;
        }
        err += std::fabs(term) * 1e-2 + 1e-16 * std::fabs(r);
        return r;
    }
    double r = riemann_zeta_ac(i).value * hurwitz_zeta_ex(x, q).value -
               hurwitz_zeta_ex(x + i - 1, q).value / (i - 1) -
               0.5 * hurwitz_zeta_ex(x + i, q).value;
    double poch = i; // (i)_{2k-1}
    double term = 0;
    for (int k = 1; k <= KEM; ++k) {
        double fact2k = 1;
        for (int j = 2; j <= 2 * k; ++j) fact2k *= j;
        term = bernoulli_number_d(2 * k) / fact2k * poch *
               hurwitz_zeta_ex(x + i + 2 * k - 1, q).value;
        r -= term;
        poch *= (double)(i + 2 * k - 1) * (i + 2 * k);
    }
    err += std::fabs(term) * 1e-2 + 1e-16 * std::fabs(r);
    return r;
}

// Exact tail for integer exponent pair (p,r): the inner sum W(s) reduces by
// partial fractions to harmonic numbers,
//   W(s) = sum_i C(p+r-i-1, r-1) s^{i-p-r} H^{(i)}_{s-1} + (p <-> r),
// so the tail is a finite combination of sigma_tail values.
double integer_tail(int p, int r, double c, int S, double& err) {
    if (p == 0 && r == 0)
        return hurwitz_zeta_ex(c - 1, S + 1).value - hurwitz_zeta_ex(c, S + 1).value;
    if (p == 0) return sigma_tail(r, c, S, err);
    if (r == 0) return sigma_tail(p, c, S, err);
    double t = 0;
    for (int i = 1; i <= p; ++i)
        t += binom_d(p + r - i - 1, r - 1) * sigma_tail(i, c + p + r - i, S, err);
    for (int j = 1; j <= r; ++j)
        t += binom_d(p + r - j - 1, p - 1) * sigma_tail(j, c + p + r - j, S, err);
    return t;
}

// Asymptotic tail for at least one non-integer exponent:
//   W(s) ~ sum_k C(b+k-1,k) zeta(a-k) s^{-b-k} + (a <-> b)
//          + B(1-a,1-b) s^{1-a-b},
// summed over s > S through Hurwitz zeta. When exactly one exponent is an
// integer p, the k = p-1 term and the beta term merge into a finite
// combination carrying a log (the z-derivative of Hurwitz zeta).
double general_tail(double a, double b, double c, int S, double& err) {
    const int K = 8;
    const double q = S + 1;
    // only a collision with the zeta(1) pole (exponent a positive integer)
    // needs the merged log form; nonpositive integers are regular
    bool a_int = std::fabs(a - std::round(a)) < int_snap && std::round(a) >= 1;
    bool b_int = std::fabs(b - std::round(b)) < int_snap && std::round(b) >= 1;

    double t = 0;
    double ck = 1; // C(b+k-1, k)
    double last = 0;
    for (int k = 0; k < K; ++k) {
        if (k > 0) ck *= (b + k - 1) / k;
        if (a_int && k == (int)std::round(a) - 1) continue;
        last = ck * riemann_zeta_ac(a - k).value * hurwitz_zeta_ex(b + c + k, q).value;
        t += last;
    }
    err += std::fabs(last);
    ck = 1;
    for (int k = 0; k < K; ++k) {
        if (k > 0) ck *= (a + k - 1) / k;
        if (b_int && k == (int)std::round(b) - 1) continue;
        last = ck * riemann_zeta_ac(b - k).value * hurwitz_zeta_ex(a + c + k, q).value;
        t += last;
    }
    err += std::fabs(last);

    auto merged = [&](int p, double other) {
        // C(other+p-2, p-1) [ (gamma + psi(p) - psi(2-p-other)) zeta(q0, S+1)
        //                     - zeta'(q0, S+1) ],  q0 = other + c + p - 1
        double cp = 1;
        for (int k = 1; k <= p - 1; ++k) cp *= (other + k - 1) / k;
        double q0 = other + c + p - 1;
        double w = specfun::euler_gamma + specfun::digamma_any(p) -
                   specfun::digamma_any(2 - p - other);
        return cp * (w * hurwitz_zeta_ex(q0, q).value - hurwitz_zeta_zderiv_ex(q0, q).value);
    };

    if (a_int) {
        t += merged((int)std::round(a), b);
    } else if (b_int) {
        t += merged((int)std::round(b), a);
    } else {
        double beta = specfun::gamma_real(1 - a) * specfun::gamma_real(1 - b) *
                      specfun::rgamma_real(2 - a - b);
        t += beta * hurwitz_zeta_ex(a + b + c - 1, q).value;
    }
    err += 1e-15 * std::fabs(t);
    return t;
}

} // namespace

bool ParamTriple::is_integer(double x) const {
    return std::fabs(x - std::round(x)) < int_snap;
}

Kind ParamTriple::kind() const {
    int n = (int)is_integer(a) + (int)is_integer(b) + (int)is_integer(c);
    if (n == 3) return Kind::AllInt;
    if (is_integer(a) && is_integer(b)) return Kind::TwoIntOneReal;
    return Kind::AllReal;
}

void ParamTriple::require_gate(const char* who) const {
    if (!in_convergence_gate())
        throw std::domain_error(std::string(who) +
                                ": outside convergence gate (need a+c>1, b+c>1, a+b+c>2)");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::direct_sum: return "direct_sum";
        case Method::huard_odd_weight: return "huard_odd_weight";
        case Method::subbarao_even: return "subbarao_even";
        case Method::huard_odd_symmetric: return "huard_odd_symmetric";
        case Method::tornheim_classic: return "tornheim_classic";
        case Method::analytic_continuation: return "analytic_continuation";
        case Method::two_integer_limit: return "two_integer_limit";
        case Method::integer_assembly: return "integer_assembly";
        case Method::mzv_direct: return "mzv_direct";
    }
    return "?";
}

EvalResult tornheim_direct(const ParamTriple& p, const DirectConfig& cfg) {
    p.require_gate("tornheim_direct");
    bool a_int = p.is_integer(p.a) && p.a >= 0;
    bool b_int = p.is_integer(p.b) && p.b >= 0;
    bool integer_pair = a_int && b_int;

    // head size: diagonal s <= S costs ~S^2/2 lattice terms
    long long budget = std::max<long long>(cfg.max_terms, 20000);
    int S = (int)std::min<long long>(integer_pair ? 2048 : 4096,
                                     (long long)std::sqrt((double)(2 * budget)));
    S = std::max(S, 128);

    double a = integer_pair ? std::round(p.a) : p.a;
    double b = integer_pair ? std::round(p.b) : p.b;
    double c = p.c;

    // brute diagonal head
    std::vector<double> pa(S + 1), pb(S + 1);
    for (int n = 1; n <= S; ++n) {
        pa[n] = std::pow((double)n, -a);
        pb[n] = (b == a) ? pa[n] : std::pow((double)n, -b);
    }
    Kahan head;
    for (int s = 2; s <= S; ++s) {
        double w = 0;
        const double* pbs = pb.data() + s;
        for (int n = 1; n < s; ++n) w += pa[n] * pbs[-n];
        head.add(std::pow((double)s, -c) * w);
    }

    double tail_err = 0;
    double tail = integer_pair
                      ? integer_tail((int)std::round(a), (int)std::round(b), c, S, tail_err)
                      : general_tail(a, b, c, S, tail_err);

    EvalResult r;
    r.value = head.s + tail;
    r.err = tail_err + 2e-16 * (std::fabs(head.s) + std::fabs(r.value)) * 8;
    r.method = Method::direct_sum;
    if (r.err > cfg.tol)
        throw std::runtime_error(
            "tornheim_direct: tail bound not achievable within term budget");
    return r;
}

} // namespace tornheim::sums
