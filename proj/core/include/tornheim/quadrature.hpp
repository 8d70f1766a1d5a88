#ifndef TORNHEIM_QUADRATURE_HPP
#define TORNHEIM_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace tornheim::quadrature {

struct QuadratureConfig {
    double target_tol = 1e-10;   // absolute
    int max_levels = 12;
    double endpoint_clip = 1e-15; // min distance to 0 and 1 for evaluations
};

struct QuadResult {
    double value = 0;
    double err = 0;      // heuristic: successive-level difference
    int levels = 0;
    std::size_t evals = 0;
    bool converged = false;
};

/// Thrown when level doubling exhausts max_levels above target_tol. Carries
/// the best estimate so callers can still inspect it.
struct ConvergenceError : std::runtime_error {
    double best;
    double err;
    int levels;
    ConvergenceError(double b, double e, int l)
        : std::runtime_error("integrate_01: tanh-sinh did not reach target tolerance"),
          best(b), err(e), levels(l) {}
};

/// Integral of f over (0,1) by tanh-sinh (double-exponential) quadrature
/// with level doubling. Endpoint log singularities are integrable as-is;
/// abscissas are clipped to [clip, 1-clip]. Throws ConvergenceError when
/// the level budget runs out.
QuadResult integrate_01(const std::function<double(double)>& f,
                        const QuadratureConfig& cfg = {});

/// Same engine, but the integrand receives (q, 1-q) with 1-q computed from
/// the transformation directly, so factors like ln sin(pi q) or g(1-q) keep
/// full precision next to q = 1.
QuadResult integrate_01_sym(const std::function<double(double, double)>& f,
                            const QuadratureConfig& cfg = {});

} // namespace tornheim::quadrature

#endif
