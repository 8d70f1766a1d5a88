#ifndef TORNHEIM_BERNOULLI_ALGEBRA_HPP
#define TORNHEIM_BERNOULLI_ALGEBRA_HPP

#include <map>

#include "tornheim/rational.hpp"

namespace tornheim::bernoulli {

/// A polynomial written in the Bernoulli basis: sum_j coeffs[j] B_j(q) plus
/// an additive constant. Since int_0^1 B_j = 0 for j >= 1, the integral of
/// the expansion over (0,1) is exactly `constant`.
struct BernPolyExpansion {
    std::map<int, Rational> coeffs; // j >= 1
    Rational constant = 0;

    double evaluate(double q) const;
    const Rational& integral01() const { return constant; }
};

/// Expansion of B_{n1}(q) B_{n2}(q) in the Bernoulli basis.
BernPolyExpansion product_expand(int n1, int n2);

/// Expansion of B_n(q)^3.
BernPolyExpansion cube_expand(int n);

/// Multiply an existing expansion by B_n(q), re-expanding each product
/// term. Used to cross-check cube_expand against iterated products.
BernPolyExpansion multiply_by_bernoulli(const BernPolyExpansion& e, int n);

/// Exact int_0^1 B_{n1}(q) B_{n2}(q) dq = (-1)^{n1+1} n1! n2! B_{n1+n2} / (n1+n2)!
Rational integral_BB(int n1, int n2);

/// Exact int_0^1 B_{n1} B_{n2} B_{n3} dq (the Carlitz triple-product value,
/// also known as Q1). The formula is stated with (n1,n2) as the expansion
/// pair; the value is permutation-invariant, which the tests assert rather
/// than canonicalizing here.
Rational integral_BBB(int n1, int n2, int n3);

} // namespace tornheim::bernoulli

#endif
