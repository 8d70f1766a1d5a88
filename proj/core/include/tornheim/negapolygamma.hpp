#ifndef TORNHEIM_NEGAPOLYGAMMA_HPP
#define TORNHEIM_NEGAPOLYGAMMA_HPP

#include "tornheim/real.hpp"

namespace tornheim::negapoly {

/// Bernoulli function A_k(q) = k zeta'(1-k, q), k >= 1, q in (0,1].
Real bernoulli_A(int k, double q);

/// Balanced negapolygamma psi^{(-m)}(q) = (A_m(q) - H_{m-1} B_m(q)) / m!,
/// m >= 1, q in (0,1). This normalization (integral zero over (0,1), equal
/// endpoint values for m >= 2) is required exactly by the Q-integral base
/// cases; the antiderivative ladder d/dq psi^{(-m)} = psi^{(-m+1)} holds.
/// For m = 1 the function is ln Gamma(q) + zeta'(0) and diverges at q = 0.
Real negapolygamma(int m, double q);

/// |central difference of psi^{(-m)} at q minus psi^{(-m+1)}(q)|, m >= 2.
/// O(delta^2) when the ladder holds.
double negapolygamma_derivative_check(int m, double q, double delta = 1e-5);

} // namespace tornheim::negapoly

#endif
