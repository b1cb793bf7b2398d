#pragma once

#include <vector>

#include "recal/cubic.hpp"

namespace recal {

/// Summary statistics driving an intercept recalibration: observed mean
/// predicted risk p0, target mean risk p1, and the variance v of the
/// predicted risks.
struct CalibrationTask {
    double p0 = 0.0;
    double p1 = 0.0;
    double v = 0.0;
};

/// Throws std::domain_error unless p0, p1 are in (0,1) and 0 <= v <= p0*(1-p0).
/// The variance bound uses the exact message the variance check is known by.
void validate_task(const CalibrationTask& task);

/// Second-order approximation of the mean updated risk E f(pi, x) for risks
/// with mean p0 and variance v:
///   x*p0 / (1-(1-x)*p0)  +  (1-x)*x*v / (1-(1-x)*p0)^3.
double taylor_lhs(const CalibrationTask& task, double x);

/// The cubic in x whose roots solve taylor_lhs(task, x) = p1.
CubicPoly cubic_coefficients(const CalibrationTask& task);

/// Diagnostics from root filtering; `survivors` holds every admissible root.
struct RootSelection {
    std::vector<double> raw_roots;
    std::vector<double> survivors;
    bool ambiguous = false;  // more than one admissible root
};

/// Picks the admissible odds-ratio from candidate roots: positive, on the
/// same side of 1 as the marginal odds-ratio, tie-broken toward the marginal
/// odds-ratio in log space. Returns 1 outright when p0 == p1. Throws
/// std::runtime_error (listing the raw roots) when nothing survives.
double select_root(const std::vector<double>& roots, double p0, double p1,
                   RootSelection* info = nullptr);

/// Variance-corrected conditional odds-ratio via the closed-form cubic.
double taylor_or(const CalibrationTask& task, RootSelection* info = nullptr);

/// Same quantity by bracketed root search on taylor_lhs(task, x) = p1,
/// restricted to the admissible side of 1; absolute tolerance 1e-12 in x.
double taylor_or_numeric(const CalibrationTask& task);

}  // namespace recal
