#include "tornheim/negapolygamma.hpp"

#include <cmath>
#include <stdexcept>

#include "tornheim/specfun.hpp"

namespace tornheim::negapoly {

using namespace specfun;

Real bernoulli_A(int k, double q) {
    if (k < 1) throw std::domain_error("bernoulli_A: k must be >= 1");
    if (!(q > 0) || q > 1) throw std::domain_error("bernoulli_A: q must lie in (0,1]");
    return scale(hurwitz_zeta_zderiv_ex(1 - k, q), k);
}

Real negapolygamma(int m, double q) {
    if (m < 1) throw std::domain_error("negapolygamma: m must be >= 1");
    if (m == 1) {
        // psi^{(-1)} = ln Gamma(q) + zeta'(0), log-divergent at q = 0, 1 off-limits
        if (!(q > 0) || !(q < 1))
            throw std::domain_error("negapolygamma: q must lie in (0,1) for m = 1");
    } else if (!(q > 0) || q > 1) {
        throw std::domain_error("negapolygamma: q must lie in (0,1]");
    }
    Real a = bernoulli_A(m, q);
    Real hb = scale(bernoulli_poly(m, q), harmonic_d(m - 1));
    double mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    return scale(a - hb, 1.0 / mfact);
}

double negapolygamma_derivative_check(int m, double q, double delta) {
    if (m < 2) throw std::domain_error("negapolygamma_derivative_check: m must be >= 2");
    double fp = negapolygamma(m, q + delta).value;
    double fm = negapolygamma(m, q - delta).value;
    double fd = (fp - fm) / (2 * delta);
    return std::fabs(fd - negapolygamma(m - 1, q).value);
}

} // namespace tornheim::negapoly
