#include "recal/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "recal/odds.hpp"
#include "recal/root_finding.hpp"

namespace recal {

void validate_task(const CalibrationTask& task) {
    detail::require_probability(task.p0, "p0");
    detail::require_probability(task.p1, "p1");
    if (!(task.v >= 0.0) || !std::isfinite(task.v)) {
        throw std::domain_error("variance must be finite and nonnegative");
    }
    if (task.v > task.p0 * (1.0 - task.p0)) {
        throw std::domain_error("Variance cannot be larger than p0*(1-p0).");
    }
}

double taylor_lhs(const CalibrationTask& task, double x) {
    validate_task(task);
    detail::require_positive(x, "odds-ratio");
    const double den = 1.0 - (1.0 - x) * task.p0;
    if (!(den > 0.0)) {
        throw std::domain_error("taylor_lhs: denominator 1-(1-x)*p0 is not positive");
    }
    return x * task.p0 / den + (1.0 - x) * x * task.v / (den * den * den);
}

CubicPoly cubic_coefficients(const CalibrationTask& task) {
    validate_task(task);
    const double p0 = task.p0, p1 = task.p1, v = task.v;
    const double p0_2 = p0 * p0;
    const double p0_3 = p0_2 * p0;
    CubicPoly poly;
    poly.c3 = p0_3 - p1 * p0_3;
    poly.c2 = 3.0 * p1 * p0_3 - 2.0 * p0_3 - 3.0 * p1 * p0_2 + 2.0 * p0_2 - v;
    poly.c1 = p0_3 - 3.0 * p1 * p0_3 + 6.0 * p1 * p0_2 - 2.0 * p0_2 + p0 - 3.0 * p1 * p0 + v;
    poly.c0 = p1 * p0_3 - 3.0 * p1 * p0_2 + 3.0 * p1 * p0 - p1;
    return poly;
}

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

double select_root(const std::vector<double>& roots, double p0, double p1,
                   RootSelection* info) {
    detail::require_probability(p0, "p0");
    detail::require_probability(p1, "p1");
    if (info) *info = RootSelection{roots, {}, false};
    if (p0 == p1) {
        if (info) info->survivors = {1.0};
        return 1.0;
    }

    const int want = sign_of(std::log(p1 / p0));
    std::vector<double> survivors;
    for (double r : roots) {
        if (!(r > 0.0)) continue;
        if (sign_of(std::log(r)) != want) continue;
        survivors.push_back(r);
    }
    if (survivors.empty()) {
        std::ostringstream msg;
        msg << "no admissible odds-ratio among cubic roots {";
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (i) msg << ", ";
            msg << roots[i];
        }
        msg << "} for p0=" << p0 << ", p1=" << p1;
        throw std::runtime_error(msg.str());
    }

    const double log_marginal = std::log(marginal_or(p0, p1));
    double best = survivors.front();
    for (double r : survivors) {
        if (std::abs(std::log(r) - log_marginal) < std::abs(std::log(best) - log_marginal)) {
            best = r;
        }
    }
    if (info) {
        info->survivors = survivors;
        info->ambiguous = survivors.size() > 1;
    }
    return best;
}

double taylor_or(const CalibrationTask& task, RootSelection* info) {
    validate_task(task);
    if (task.p0 == task.p1) {
        if (info) *info = RootSelection{{}, {1.0}, false};
        return 1.0;
    }
    return select_root(solve_cubic_real(cubic_coefficients(task)), task.p0, task.p1, info);
}

double taylor_or_numeric(const CalibrationTask& task) {
    validate_task(task);
    if (task.p0 == task.p1) return 1.0;

    const double m = marginal_or(task.p0, task.p1);
    const double lo = (task.p1 < task.p0) ? std::min(1.0, m) / 1e3 : 1.0;
    const double hi = (task.p1 < task.p0) ? 1.0 : std::max(1.0, m) * 1e3;
    const auto g = [&](double x) { return taylor_lhs(task, x) - task.p1; };

    // Sweep log-spaced cells so every same-side crossing is located, then
    // resolve ties exactly like the analytic path.
    constexpr int kCells = 2000;
    const double log_lo = std::log(lo), log_hi = std::log(hi);
    std::vector<double> roots;
    double xa = lo, ga = g(xa);
    if (ga == 0.0) roots.push_back(xa);
    for (int i = 1; i <= kCells; ++i) {
        const double xb = std::exp(log_lo + (log_hi - log_lo) * i / kCells);
        const double gb = g(xb);
        if (gb == 0.0) {
            roots.push_back(xb);
        } else if (ga * gb < 0.0) {
            roots.push_back(bisect(g, xa, xb, 1e-12));
        }
        xa = xb;
        ga = gb;
    }
    if (roots.empty()) {
        throw std::runtime_error("taylor_or_numeric: no sign change inside the search bracket");
    }
    const double log_m = std::log(m);
    double best = roots.front();
    for (double r : roots) {
        if (std::abs(std::log(r) - log_m) < std::abs(std::log(best) - log_m)) best = r;
    }
    return best;
}

}  // namespace recal
