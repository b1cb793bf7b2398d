#pragma once

#include <vector>

namespace recal {

/// Coefficients of c3*x^3 + c2*x^2 + c1*x + c0.
struct CubicPoly {
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double operator()(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    double derivative(double x) const { return (3.0 * c3 * x + 2.0 * c2) * x + c1; }
};

/// All distinct real roots, ascending. Closed-form (Cardano in complex
/// arithmetic); complex conjugate pairs are discarded when the imaginary
/// part exceeds 1e-9 relative to the root magnitude. Degrades to the
/// quadratic/linear solve when the leading coefficient vanishes.
/// Throws std::invalid_argument when every coefficient is zero.
std::vector<double> solve_cubic_real(const CubicPoly& poly);

}  // namespace recal
