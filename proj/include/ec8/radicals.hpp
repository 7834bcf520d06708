#pragma once

// Radical quantities attached to an ordered root triple (e1, e2, e3):
//
//     beta  = sqrt((e1 - e3) / (e1 - e2))
//     gamma = sqrt((e1 - e3) * (e1 - e2))
//     beta1 = sqrt((beta + 1) / (beta - 1)) + sqrt(2 / (beta - 1))
//     beta2 = sqrt(2 / (beta + 1)) + 1 / beta
//
// every square root on the principal branch.  The roots are taken in the
// order given — no relabeling is ever performed here, so beta and gamma are
// functions of the ordered triple, not of the curve alone.

#include <cmath>
#include <utility>

#include "complex_ops.hpp"
#include "curve.hpp"
#include "errors.hpp"

namespace ec8 {

struct TorsionRadicals {
    Complex beta;
    Complex gamma;
    Complex beta1;
    Complex beta2;
};

inline std::pair<Complex, Complex> beta_gamma(const Curve& c) {
    Complex beta = principal_sqrt((c.e1() - c.e3()) / (c.e1() - c.e2()));
    Complex gamma = principal_sqrt((c.e1() - c.e3()) * (c.e1() - c.e2()));
    return {beta, gamma};
}

inline std::pair<Complex, Complex> beta_invariants(Complex beta) {
    if (beta == Complex(0.0) || beta == Complex(1.0) || beta == Complex(-1.0))
        throw InvalidBeta("beta_invariants: beta must avoid {0, 1, -1}");
    Complex beta1 = principal_sqrt((beta + 1.0) / (beta - 1.0)) + principal_sqrt(2.0 / (beta - 1.0));
    Complex beta2 = principal_sqrt(2.0 / (beta + 1.0)) + 1.0 / beta;
    return {beta1, beta2};
}

// True when beta is real within tolerance and exceeds 1.  The order-8
// construction is derived under this assumption; outside it the formulas
// still evaluate, but nothing is promised about the result.
inline bool beta_assumption_met(Complex beta, Tolerance tol = {}) {
    double s = std::max(1.0, std::abs(beta));
    return std::abs(beta.imag()) <= tol.rel * s && beta.real() > 1.0;
}

inline TorsionRadicals torsion_radicals(const Curve& c) {
    auto [beta, gamma] = beta_gamma(c);
    auto [beta1, beta2] = beta_invariants(beta);
    return {beta, gamma, beta1, beta2};
}

} // namespace ec8
