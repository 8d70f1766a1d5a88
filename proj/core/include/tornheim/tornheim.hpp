#ifndef TORNHEIM_TORNHEIM_HPP
#define TORNHEIM_TORNHEIM_HPP

#include <string>
#include <vector>

#include "tornheim/quadrature.hpp"
#include "tornheim/real.hpp"

namespace tornheim::sums {

// Evaluators for the double series T(a,b,c) = sum over n,m >= 1 of
// n^{-a} m^{-b} (n+m)^{-c}: the truncated-series oracle, the classical
// closed forms, the analytic (integral) expression for non-integer
// parameters, the two-integer limit, and the residual checks tying them
// together.

enum class Kind { AllReal, TwoIntOneReal, AllInt };

struct ParamTriple {
    double a, b, c;

    ParamTriple(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {}

    double weight() const { return a + b + c; }
    bool is_integer(double x) const;
    Kind kind() const;
    /// Sufficient convergence region for direct summation; contains every
    /// closed-form instance exercised here, including T(0,1,3).
    bool in_convergence_gate() const { return a + c > 1 && b + c > 1 && a + b + c > 2; }
    void require_gate(const char* who) const;
};

enum class Method {
    direct_sum,
    huard_odd_weight,
    subbarao_even,
    huard_odd_symmetric,
    tornheim_classic,
    analytic_continuation,
    two_integer_limit,
    integer_assembly,
    mzv_direct,
};

const char* method_name(Method m);

struct EvalResult {
    double value = 0;
    double err = 0;
    Method method = Method::direct_sum;
};

struct DirectConfig {
    double tol = 1e-9;            // requested absolute accuracy
    long long max_terms = 2000000; // budget for lattice terms in the head
};

/// Truncated diagonal summation plus an Euler-Maclaurin tail: the series is
/// regrouped over s = n+m, summed brutally to S, and the remainder
/// sum_{s>S} s^{-c} W(s) is evaluated from the exact harmonic-number form
/// of W(s) (integer a,b) or its asymptotic expansion (otherwise), reduced
/// to Hurwitz zeta values at (x, S+1). err carries the EM remainder bounds.
/// This is the oracle the closed forms are checked against.
EvalResult tornheim_direct(const ParamTriple& p, const DirectConfig& cfg = {});

struct ReduceTerm {
    double coefficient;
    ParamTriple triple;
};

/// One application of T(a,b-1,c+1) + T(a-1,b,c+1) = T(a,b,c); with
/// merge_symmetric the two terms are combined via T(a,b,c) = T(b,a,c)
/// when they coincide up to that swap (T(1,1,2) -> 2 T(0,1,3)).
std::vector<ReduceTerm> tornheim_reduce(const ParamTriple& p, bool merge_symmetric = true);

/// Closed form for T(i,0,N-i), N odd > 1, 1 <= i <= N-1.
EvalResult tornheim_T_i0(int i, int N);

/// Binomial reduction of T(n1,n2,n3) to the T(i,0,N-i) values, N = n1+n2+n3.
/// N odd uses the closed form throughout; N even is supported only when
/// every required terminal is T(1,0,N-1) (resolvable through the classical
/// T(1,0,N-1) = T(1,1,N-2)/2), otherwise a domain error is thrown.
EvalResult tornheim_huard(int n1, int n2, int n3);

enum class ClassicForm {
    one_one_a,      // T(1,1,a-2) = (a-1) zeta(a) - sum zeta(i) zeta(a-i)
    endpoint,       // T(a-2,1,1) = T(1,1,a-2)/2 + zeta(a)
    one_zero_a,     // T(1,0,a-1) = T(1,1,a-2)/2
};

EvalResult tornheim_classics(ClassicForm form, int a);

/// Residual of 2 T(a-2,1,1) - T(1,1,a-2) - 2 zeta(a), from the closed forms.
double tornheim_classics_relation_residual(int a);

/// T(n,n,n) through the symmetric-argument closed forms. Even n = 2k uses
/// both published expressions (zeta products and the Bernoulli-number
/// form), which must agree; odd uses the single alternating-sum form.
EvalResult tornheim_symmetric(int n);
/// The two even-case expressions separately, for agreement tests.
std::pair<double, double> tornheim_symmetric_even_pair(int k); // T(2k,2k,2k)

struct FourierResiduals {
    double cos_residual;
    double sin_residual;
    double series_tail_bound;
};

/// Residuals of the cosine/sine trigonometric-series identities for
/// zbar(z,q) +- zbar(z,1-q), z > 1, q in (0,1).
FourierResiduals fourier_identity_check(double z, double q);

struct Prop31Residuals {
    double sym_residual;   // f_c f_c f_c T^sym - (I + J^sym)
    double nsym_residual;  // f_s f_s f_c T^nsym - (I - J^nsym)
};

Prop31Residuals prop31_check(double a, double b, double c,
                             const quadrature::QuadratureConfig& cfg = quadrature::catalog_config());

/// Reciprocity residual for all-even integer triples:
/// T^sym - (-1)^{alpha/2} (2 pi)^alpha / (2 prod (n_i-1)!) I(n1,n2,n3).
double reciprocity_residual(int n1, int n2, int n3,
                            const quadrature::QuadratureConfig& cfg = quadrature::catalog_config());

/// The analytic expression for non-integer parameters:
/// T = 4 lam(a) lam(b) lam(c) sin(pi c/2) [cos(pi(a-b)/2)(J(c,a,b)+J(c,b,a))
///     - cos(pi(a+b)/2)(I(a,b,c)+J(a,b,c))].
/// Parameters within 1e-3 of an integer are rejected; near-integer limits
/// go through tornheim_analytic_limit.
EvalResult tornheim_analytic(double a, double b, double c,
                             const quadrature::QuadratureConfig& cfg = quadrature::catalog_config());

/// Quadratic Richardson extrapolation of tornheim_analytic along
/// (n1,n2,n3) + eps (1,1,1), eps in {1e-2, 10^-2.5, 1e-3}.
double tornheim_analytic_limit(int n1, int n2, int n3,
                               const quadrature::QuadratureConfig& cfg = quadrature::catalog_config());

/// T(n1,n2,c) for integer n1,n2 >= 1 and non-integer c: the three-parity-case
/// reduction to quadratures over B, A and zbar/zbar_plus.
EvalResult tornheim_two_int(int n1, int n2, double c,
                            const quadrature::QuadratureConfig& cfg = quadrature::catalog_config());

/// lambda(z) = Gamma(1-z)/(2 pi)^{1-z}; finite for z not in N.
double lambda_factor(double z);
/// f_c(z), f_s(z) = 2 Gamma(z)/(2 pi)^z {cos,sin}(pi z/2).
double trig_weight_cos(double z);
double trig_weight_sin(double z);

} // namespace tornheim::sums

#endif
