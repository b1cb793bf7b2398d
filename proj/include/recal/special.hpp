#pragma once

namespace recal {

/// log of the beta function B(a, b).
double log_beta(double a, double b);

/// Regularized incomplete beta function I_x(a, b) = P(X <= x) for
/// X ~ beta(a, b). Continued-fraction evaluation (Lentz), accurate to
/// ~1e-14 for a, b up to ~1e6.
double incomplete_beta(double a, double b, double x);

}  // namespace recal
