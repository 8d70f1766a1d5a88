#include <cmath>
#include <stdexcept>

#include "tornheim/specfun.hpp"
#include "tornheim/tornheim.hpp"

namespace tornheim::sums {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

using specfun::riemann_zeta;

double binom_d(int n, int k) {
    if (k < 0 || k > n) return 0;
    int kk = std::min(k, n - k);
    double b = 1;
    for (int i = 1; i <= kk; ++i) b = b * (n - kk + i) / i;
    return b;
}

double zeta_at(int s) {
    // zeta(0) = -1/2 participates in the binomial sums
    return s == 0 ? -0.5 : riemann_zeta(s).value;
}

// T(1,1,m) = (m+1) zeta(m+2) - sum_{i=2}^{m} zeta(i) zeta(m+2-i), m >= 1
double classic_one_one(int m, double& err) {
    int a = m + 2;
    double v = (a - 1) * zeta_at(a);
    for (int i = 2; i <= a - 2; ++i) v -= zeta_at(i) * zeta_at(a - i);
    err += 1e-15 * (std::fabs(v) + a);
    return v;
}

} // namespace

std::vector<ReduceTerm> tornheim_reduce(const ParamTriple& p, bool merge_symmetric) {
    std::vector<ReduceTerm> out;
    out.push_back({1.0, ParamTriple(p.a, p.b - 1, p.c + 1)});
    out.push_back({1.0, ParamTriple(p.a - 1, p.b, p.c + 1)});
    if (merge_symmetric) {
        // identify T(x,y,z) with T(y,x,z); canonical order has a <= b
        for (auto& t : out)
            if (t.triple.a > t.triple.b) std::swap(t.triple.a, t.triple.b);
        if (out[0].triple.a == out[1].triple.a && out[0].triple.b == out[1].triple.b &&
            out[0].triple.c == out[1].triple.c) {
            out[0].coefficient += out[1].coefficient;
            out.pop_back();
        }
    }
    return out;
}

EvalResult tornheim_T_i0(int i, int N) {
    if (N <= 1 || N % 2 == 0)
        throw std::domain_error("tornheim_T_i0: N must be an odd integer > 1");
    if (i < 1 || i > N - 1)
        throw std::domain_error("tornheim_T_i0: need 1 <= i <= N-1");
    double s = 0;
    for (int j = 0; j <= (N - i - 1) / 2; ++j)
        s += binom_d(N - 2 * j - 1, i - 1) * zeta_at(2 * j) * zeta_at(N - 2 * j);
    for (int j = 0; j <= i / 2; ++j)
        s += binom_d(N - 2 * j - 1, N - i - 1) * zeta_at(2 * j) * zeta_at(N - 2 * j);
    double v = (i % 2 == 0 ? s : -s) + zeta_at(0) * zeta_at(N);
    EvalResult r;
    r.value = v;
    r.err = 1e-15 * (std::fabs(v) + N);
    r.method = Method::huard_odd_weight;
    return r;
}

EvalResult tornheim_huard(int n1, int n2, int n3) {
    if (n1 < 0 || n2 < 0 || n3 < 0)
        throw std::domain_error("tornheim_huard: indices must be nonnegative");
    if (n1 + n2 < 1)
        throw std::domain_error("tornheim_huard: need a positive first pair");
    int N = n1 + n2 + n3;
    double err = 0;

    auto terminal = [&](int i) -> double {
        if (N % 2 == 1 && N > 1) {
            EvalResult t = tornheim_T_i0(i, N);
            err += t.err;
            return t.value;
        }
        if (i == 1 && N >= 4) {
            // T(1,0,N-1) = T(1,1,N-2)/2; even weights reachable only here
            return 0.5 * classic_one_one(N - 3, err);
        }
        throw std::domain_error(
            "tornheim_huard: even weight requires all terminals at i = 1");
    };

    double v = 0;
    for (int i = 1; i <= n1; ++i) v += binom_d(n1 + n2 - i - 1, n1 - i) * terminal(i);
    for (int i = 1; i <= n2; ++i) v += binom_d(n1 + n2 - i - 1, n2 - i) * terminal(i);
    EvalResult r;
    r.value = v;
    r.err = err + 1e-15 * std::fabs(v);
    r.method = Method::huard_odd_weight;
    return r;
}

EvalResult tornheim_classics(ClassicForm form, int a) {
    if (a < 4) throw std::domain_error("tornheim_classics: a must be >= 4");
    EvalResult r;
    r.method = Method::tornheim_classic;
    double err = 0;
    double t11 = classic_one_one(a - 2, err); // T(1,1,a-2)
    switch (form) {
        case ClassicForm::one_one_a:
            r.value = t11;
            break;
        case ClassicForm::endpoint:
            r.value = 0.5 * t11 + riemann_zeta(a).value;
            break;
        case ClassicForm::one_zero_a:
            r.value = 0.5 * t11;
            break;
    }
    r.err = err + 1e-15 * std::fabs(r.value);
    return r;
}

double tornheim_classics_relation_residual(int a) {
    if (a < 4) throw std::domain_error("tornheim_classics: a must be >= 4");
    double lhs = 2 * tornheim_classics(ClassicForm::endpoint, a).value -
                 tornheim_classics(ClassicForm::one_one_a, a).value;
    return lhs - 2 * riemann_zeta(a).value;
}

std::pair<double, double> tornheim_symmetric_even_pair(int k) {
    if (k < 1) throw std::domain_error("tornheim_symmetric: n must be >= 1");
    // zeta-product form
    double v1 = 0;
    for (int i = 0; i <= k; ++i)
        v1 += binom_d(4 * k - 2 * i - 1, 2 * k - 1) * zeta_at(2 * i) * zeta_at(6 * k - 2 * i);
    v1 *= 4.0 / 3.0;
    // Bernoulli-number form
    double v2 = 0;
    for (int j = 0; j <= k; ++j) {
        double f1 = 1, f2 = 1;
        for (int i = 2; i <= 2 * j; ++i) f1 *= i;
        for (int i = 2; i <= 6 * k - 2 * j; ++i) f2 *= i;
        v2 += binom_d(4 * k - 2 * j - 1, 2 * k - 1) * specfun::bernoulli_number_d(2 * j) *
              specfun::bernoulli_number_d(6 * k - 2 * j) / (f1 * f2);
    }
    v2 *= (k % 2 == 0 ? 1.0 : -1.0) / 3.0 * std::pow(2 * pi, 6.0 * k);
    return {v1, v2};
}

EvalResult tornheim_symmetric(int n) {
    if (n < 1) throw std::domain_error("tornheim_symmetric: n must be >= 1");
    EvalResult r;
    if (n % 2 == 0) {
        auto [v1, v2] = tornheim_symmetric_even_pair(n / 2);
        r.value = v1;
        r.err = std::fabs(v1 - v2) + 1e-15 * std::fabs(v1);
        r.method = Method::subbarao_even;
        return r;
    }
    int k = (n - 1) / 2;
    double v = 0;
    for (int i = 0; i <= k; ++i)
        v += binom_d(4 * k - 2 * i + 1, 2 * k) * zeta_at(2 * i) * zeta_at(6 * k - 2 * i + 3);
    r.value = -4 * v;
    r.err = 1e-15 * (std::fabs(r.value) + 1);
    r.method = Method::huard_odd_symmetric;
    return r;
}

} // namespace tornheim::sums
