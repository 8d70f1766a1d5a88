#ifndef TORNHEIM_QR_INTEGRALS_HPP
#define TORNHEIM_QR_INTEGRALS_HPP

#include "tornheim/tornheim.hpp"

namespace tornheim::sums {

// The Q family pairs Bernoulli polynomials with balanced negapolygammas:
//   Q1 = <B B B>   Q2 = <B B psi>    Q3 = <psi psi B>
//   Q4 = <psi psi(1-q) B>  Q5 = <psi psi psi>  Q6 = <psi psi psi(1-q)>
// Q1 and Q2 have closed forms; Q3..Q6 descend by integration-by-parts
// recurrences to n1 = 1 bases expressed through K/K*/Z/Z*/N/M/M*. The R
// family replaces psi^{(-k)} by the Bernoulli function A_k and converts to
// Q through A_m = m! psi^{(-m)} + h_m B_m. T(n1,n2,n3) is assembled from
// the R values by parity dispatch.

/// Q_j(n1,n2,n3), j in 1..6.
EvalResult q_integral(int j, int n1, int n2, int n3);

/// Closed form for Q2 (the alpha-odd simplification is applied when it
/// holds; the general sine/cosine form otherwise).
EvalResult q2_closed(int n1, int n2, int n3);

/// R_j(n1,n2,n3), j in 1..6, from the Q dictionary.
EvalResult r_integral(int j, int n1, int n2, int n3);

/// T(n1,n2,n3) for positive integers inside the convergence gate: parity
/// dispatch into the six R-combinations with prefactor
/// p(alpha) (2 pi)^alpha / (2 n1! n2! n3!).
EvalResult tornheim_integer(int n1, int n2, int n3);

/// p(n) = (-1)^{n/2} for even n, (-1)^{(n+1)/2} for odd.
int parity_sign(int n);

} // namespace tornheim::sums

#endif
