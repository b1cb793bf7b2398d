#pragma once

#include <Eigen/Core>

namespace recal {

/// Nodes inside (0,1) with weights normalized to sum to one, so that
/// sum_i w_i * g(x_i) approximates the expectation of g under the rule's
/// weight distribution.
struct QuadratureRule {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
};

/// Gauss rule for expectations against a beta(alpha, beta) density on (0,1):
/// the Jacobi weight is folded into the rule, so the integrand passed to it
/// must NOT include the density. Nodes/weights come from the Golub-Welsch
/// symmetric tridiagonal eigenproblem; the rule is exact for polynomial
/// integrands up to degree 2n-1 and converges geometrically for integrands
/// analytic on [0,1], for every alpha, beta > 0.
QuadratureRule beta_expectation_rule(double alpha, double beta, int n = 256);

/// Gauss-Legendre on (0,1), normalized: sum_i w_i * g(x_i) ~ integral of g.
/// Identical to beta_expectation_rule(1, 1, n).
QuadratureRule gauss_legendre01(int n = 256);

}  // namespace recal
