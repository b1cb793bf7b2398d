#include "recal/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace recal {

// Recurrence coefficients for Jacobi polynomials orthogonal w.r.t.
// (1-t)^a (1+t)^b on [-1,1] (Gautschi's r_jacobi), with a = beta-1 and
// b = alpha-1 so that mapping t -> (1+t)/2 yields the beta(alpha, beta)
// weight on (0,1). Normalizing the Golub-Welsch weights by the total mass
// leaves w_i equal to the squared first eigenvector component, so no beta
// function evaluations are needed and the construction is overflow-free
// for arbitrarily large shape parameters.
QuadratureRule beta_expectation_rule(double alpha, double beta, int n) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::domain_error("beta_expectation_rule: shape parameters must be positive");
    }
    if (n < 1) throw std::invalid_argument("beta_expectation_rule: need at least one node");

    const double a = beta - 1.0;
    const double b = alpha - 1.0;

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    if (n > 1) {
        sub[0] = std::sqrt(4.0 * (a + 1.0) * (b + 1.0) /
                           ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0)));
        for (int k = 2; k < n; ++k) {
            const double s = 2.0 * k + a + b;
            sub[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) /
                                   (s * s * (s + 1.0) * (s - 1.0)));
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("beta_expectation_rule: eigen decomposition failed");
    }

    QuadratureRule rule;
    rule.nodes = (1.0 + solver.eigenvalues().array()) * 0.5;
    rule.weights = solver.eigenvectors().row(0).array().square();
    // clamp eigenvalue round-off at the support boundary
    rule.nodes = rule.nodes.max(1e-300).min(1.0 - 1e-16);
    return rule;
}

QuadratureRule gauss_legendre01(int n) { return beta_expectation_rule(1.0, 1.0, n); }

}  // namespace recal
