#include "tornheim/bernoulli_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tornheim/specfun.hpp"

namespace tornheim::bernoulli {

using specfun::bernoulli_number;
using specfun::bernoulli_poly;

namespace {

void require_positive(int n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": index must be >= 1");
}

int cutoff(int n1, int n2) { return std::max(n1 / 2, n2 / 2); }

} // namespace

double BernPolyExpansion::evaluate(double q) const {
    double v = to_double(constant);
    for (const auto& [j, c] : coeffs)
        v += to_double(c) * bernoulli_poly(j, q).value;
    return v;
}

BernPolyExpansion product_expand(int n1, int n2) {
    require_positive(n1, "product_expand");
    require_positive(n2, "product_expand");
    BernPolyExpansion e;
    for (int k = 0; k <= cutoff(n1, n2); ++k) {
        Rational w = Rational(n1) * Rational(binomial_big(n2, 2 * k)) +
                     Rational(n2) * Rational(binomial_big(n1, 2 * k));
        if (w == 0) continue;
        int j = n1 + n2 - 2 * k;
        e.coeffs[j] += w * bernoulli_number(2 * k) / Rational(j);
    }
    Rational c = Rational(factorial_big(n1) * factorial_big(n2), factorial_big(n1 + n2)) *
                 bernoulli_number(n1 + n2);
    e.constant = (n1 % 2 == 0) ? -c : c; // (-1)^{n1+1}
    return e;
}

BernPolyExpansion multiply_by_bernoulli(const BernPolyExpansion& e, int n) {
    require_positive(n, "multiply_by_bernoulli");
    BernPolyExpansion out;
    for (const auto& [j, c] : e.coeffs) {
        BernPolyExpansion pj = product_expand(j, n);
        for (const auto& [i, ci] : pj.coeffs) out.coeffs[i] += c * ci;
        out.constant += c * pj.constant;
    }
    // constant * B_n(q)
    if (e.constant != 0) out.coeffs[n] += e.constant;
    return out;
}

BernPolyExpansion cube_expand(int n) {
    require_positive(n, "cube_expand");
    BernPolyExpansion e;
    for (int k = 0; k <= n / 2; ++k) {
        Rational outer = Rational(n) * Rational(binomial_big(n, 2 * k)) / Rational(n - k) *
                         bernoulli_number(2 * k);
        if (outer == 0) continue;
        for (int j = 0; j <= n - k; ++j) {
            Rational inner = Rational(n) * Rational(binomial_big(2 * n - 2 * k, 2 * j)) +
                             Rational(2 * (n - k)) * Rational(binomial_big(n, 2 * j));
            if (inner == 0) continue;
            int deg = 3 * n - 2 * k - 2 * j;
            e.coeffs[deg] += outer * inner * bernoulli_number(2 * j) / Rational(deg);
        }
    }
    Rational sgn = (n % 2 == 0) ? Rational(-1) : Rational(1); // (-1)^{n+1}
    e.coeffs[n] += sgn * bernoulli_number(2 * n) * Rational(factorial_big(n) * factorial_big(n),
                                                            factorial_big(2 * n));
    Rational tail = 0;
    for (int k = 0; k <= n / 2; ++k) {
        tail += Rational(binomial_big(2 * n - 2 * k - 1, n - 1)) * bernoulli_number(2 * k) *
                bernoulli_number(3 * n - 2 * k) /
                Rational(factorial_big(2 * k) * factorial_big(3 * n - 2 * k));
    }
    BigInt nf = factorial_big(n);
    e.constant += sgn * Rational(2) * Rational(nf * nf * nf) * tail;
    // drop exact zeros so coefficient-wise comparisons are canonical
    for (auto it = e.coeffs.begin(); it != e.coeffs.end();)
        it = (it->second == 0) ? e.coeffs.erase(it) : std::next(it);
    return e;
}

Rational integral_BB(int n1, int n2) {
    require_positive(n1, "integral_BB");
    require_positive(n2, "integral_BB");
    Rational v = Rational(factorial_big(n1) * factorial_big(n2), factorial_big(n1 + n2)) *
                 bernoulli_number(n1 + n2);
    return (n1 % 2 == 0) ? -v : v;
}

Rational integral_BBB(int n1, int n2, int n3) {
    require_positive(n1, "integral_BBB");
    require_positive(n2, "integral_BBB");
    require_positive(n3, "integral_BBB");
    Rational s = 0;
    for (int k = 0; 2 * k <= n1 + n2 - 1; ++k) {
        Rational w = Rational(n1) * Rational(binomial_big(n2, 2 * k)) +
                     Rational(n2) * Rational(binomial_big(n1, 2 * k));
        if (w == 0) continue;
        s += w * Rational(factorial_big(n1 + n2 - 2 * k - 1), factorial_big(n1 + n2 + n3 - 2 * k)) *
             bernoulli_number(2 * k) * bernoulli_number(n1 + n2 + n3 - 2 * k);
    }
    s *= Rational(factorial_big(n3));
    return (n3 % 2 == 0) ? -s : s; // (-1)^{n3+1}
}

} // namespace tornheim::bernoulli
