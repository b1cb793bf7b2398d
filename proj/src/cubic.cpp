#include "recal/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace recal {

namespace {

constexpr double kImagTol = 1e-9;

// One safeguarded Newton cleanup pass; keeps the iterate only while the
// residual shrinks.
double polish_root(const CubicPoly& p, double x) {
    double fx = std::abs(p(x));
    for (int it = 0; it < 8; ++it) {
        const double d = p.derivative(x);
        if (d == 0.0 || fx == 0.0) break;
        const double xn = x - p(x) / d;
        const double fn = std::abs(p(xn));
        if (!(fn < fx)) break;
        x = xn;
        fx = fn;
    }
    return x;
}

void append_real(std::vector<double>& out, std::complex<double> z) {
    if (std::abs(z.imag()) <= kImagTol * std::max(1.0, std::abs(z.real()))) {
        out.push_back(z.real());
    }
}

std::vector<double> solve_quadratic(double a, double b, double c) {
    std::vector<double> out;
    if (a == 0.0) {
        if (b == 0.0) {
            if (c == 0.0) throw std::invalid_argument("cubic: all coefficients are zero");
            return out;  // nonzero constant, no roots
        }
        out.push_back(-c / b);
        return out;
    }
    const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4.0 * a * c));
    // pick the sign that avoids cancellation in -b +/- sqrt(disc)
    const std::complex<double> q =
        (b >= 0.0) ? (-b - disc) * 0.5 : (-b + disc) * 0.5;
    append_real(out, q / a);
    if (std::abs(q) > 0.0) append_real(out, c / q);
    return out;
}

}  // namespace

std::vector<double> solve_cubic_real(const CubicPoly& poly) {
    const double a = poly.c3, b = poly.c2, c = poly.c1, d = poly.c0;
    const double tail = std::max({std::abs(b), std::abs(c), std::abs(d)});

    std::vector<double> roots;
    if (std::abs(a) < 1e-14 * tail || a == 0.0) {
        roots = solve_quadratic(b, c, d);
    } else {
        // Cardano via the universal complex formula: roots are
        // -(b + u_k C + d0/(u_k C)) / (3a) with u_k the cube roots of unity.
        const double d0 = b * b - 3.0 * a * c;
        const double d1 = 2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d;
        if (d0 == 0.0 && d1 == 0.0) {
            roots.push_back(-b / (3.0 * a));  // triple root
        } else {
            const std::complex<double> s =
                std::sqrt(std::complex<double>(d1 * d1 - 4.0 * d0 * d0 * d0));
            std::complex<double> big = (std::abs(d1 + s) >= std::abs(d1 - s))
                                           ? (d1 + s) * 0.5
                                           : (d1 - s) * 0.5;
            const std::complex<double> C = std::pow(big, 1.0 / 3.0);
            static const std::complex<double> u[3] = {
                {1.0, 0.0},
                {-0.5, std::sqrt(3.0) / 2.0},
                {-0.5, -std::sqrt(3.0) / 2.0},
            };
            for (const auto& uk : u) {
                const std::complex<double> ukC = uk * C;
                append_real(roots, -(b + ukC + d0 / ukC) / (3.0 * a));
            }
        }
    }

    for (double& r : roots) r = polish_root(poly, r);

    std::sort(roots.begin(), roots.end());
    std::vector<double> distinct;
    for (double r : roots) {
        if (distinct.empty() || std::abs(r - distinct.back()) > 1e-9 * std::max(1.0, std::abs(r))) {
            distinct.push_back(r);
        }
    }
    return distinct;
}

}  // namespace recal
