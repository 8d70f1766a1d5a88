#ifndef TORNHEIM_INTEGRALS_HPP
#define TORNHEIM_INTEGRALS_HPP

#include <array>
#include <string>

#include "tornheim/quadrature.hpp"
#include "tornheim/real.hpp"

namespace tornheim::quadrature {

// The integral catalog over (0,1):
//   I(a,b,c)  = int zbar(a,q) zbar(b,q) zbar(c,q)
//   J(a,b,c)  = int zbar(a,q) zbar(b,q) zbar(c,1-q)
//   N_{m,n}   = int psi^{(-m)}(q) B_n(q)                    (closed form)
//   M_{m,n}   = int psi^{(-m)}(q) psi^{(-n)}(q)             (closed form)
//   M*_{m,n}  = int psi^{(-m)}(q) psi^{(-n)}(1-q)           (closed form)
//   K_{m,n}   = int psi^{(-m)}(q) B_n(q) ln Gamma(q)        (quadrature only)
//   K*_{m,n}  = int psi^{(-m)}(1-q) B_n(q) ln Gamma(q)      (quadrature only)
//   Z_{m,n}   = int psi^{(-m)}(q) psi^{(-n)}(q) ln Gamma(q) (quadrature only)
//   Z*_{m,n}  = int psi^{(-m)}(q) psi^{(-n)}(1-q) ln Gamma  (quadrature only)
//   U_{m,n}   = int psi^{(-m)}(q) B_n(q) ln sin(pi q)       (quadrature only)
// plus the two-zeta product integrals with their closed forms.
//
// Error estimates on quadrature-only values are heuristic (level
// differences); closed forms carry propagated rounding bounds.

enum class Family { I, J, N, M, Mstar, K, Kstar, Z, Zstar, U, TwoZetaSame, TwoZetaReflected };

struct IntegralId {
    Family family;
    std::array<double, 3> idx{0, 0, 0};

    int arity() const;             // 3 for I/J, 2 otherwise
    void validate() const;         // arity and integrality constraints
    std::string name() const;
};

struct CatalogValue {
    double value = 0;
    double err = 0;
    bool heuristic_err = true;
};

QuadratureConfig catalog_config(); // tolerance used for cached catalog values

QuadResult integral_I(double a, double b, double c, const QuadratureConfig& cfg = catalog_config());
QuadResult integral_J(double a, double b, double c, const QuadratureConfig& cfg = catalog_config());

Real integral_N(int m, int n);        // closed form
Real integral_M(int k, int kp);       // closed form
Real integral_Mstar(int k, int kp);   // closed form
QuadResult integral_N_quad(int m, int n, const QuadratureConfig& cfg = catalog_config());
QuadResult integral_M_quad(int k, int kp, const QuadratureConfig& cfg = catalog_config());
QuadResult integral_Mstar_quad(int k, int kp, const QuadratureConfig& cfg = catalog_config());

QuadResult integral_K(int m, int n, const QuadratureConfig& cfg = catalog_config());
QuadResult integral_Kstar(int m, int n, const QuadratureConfig& cfg = catalog_config());
QuadResult integral_Z(int m, int n, const QuadratureConfig& cfg = catalog_config());
QuadResult integral_Zstar(int m, int n, const QuadratureConfig& cfg = catalog_config());
QuadResult integral_U(int m, int n, const QuadratureConfig& cfg = catalog_config());

/// Cached catalog access used by the Q/R machinery (thread-safe; values are
/// computed once at catalog_config() tolerance).
CatalogValue catalog(Family f, int m, int n);

/// Closed form 2 Gamma(a) Gamma(b) / (2 pi)^{a+b} zeta(a+b) cos(pi (a -+ b)/2),
/// a, b > 1; reflected selects the (a+b) branch.
Real two_zeta_closed(double a, double b, bool reflected);
QuadResult two_zeta_quad(double a, double b, bool reflected,
                         const QuadratureConfig& cfg = catalog_config());

struct LogGammaMoments {
    double L1_quad, L1_closed, L1_residual;
    double L2_quad, L2_closed, L2_residual;
    double L3_quad;       // numeric only; no closed form asserted
    double L3_err;
};
LogGammaMoments loggamma_moments_check(const QuadratureConfig& cfg = catalog_config());

/// Dispatch by id (validated).
CatalogValue evaluate(const IntegralId& id, const QuadratureConfig& cfg = catalog_config());

} // namespace tornheim::quadrature

#endif
