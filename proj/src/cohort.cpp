#include "recal/cohort.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "recal/odds.hpp"
#include "recal/root_finding.hpp"

namespace recal {

void validate_risks(const Eigen::Ref<const Eigen::ArrayXd>& risks) {
    if (risks.size() == 0) throw std::invalid_argument("cohort must be nonempty");
    if (!((risks > 0.0).all() && (risks < 1.0).all())) {
        throw std::domain_error("all risks must lie strictly in (0,1)");
    }
}

void validate_labeled(const LabeledCohort& cohort) {
    validate_risks(cohort.risks);
    if (cohort.outcomes.size() != cohort.risks.size()) {
        throw std::invalid_argument("risks and outcomes must have equal length");
    }
    if (!((cohort.outcomes == 0) || (cohort.outcomes == 1)).all()) {
        throw std::invalid_argument("outcomes must be 0 or 1");
    }
}

MomentSummary moments(const Eigen::Ref<const Eigen::ArrayXd>& risks) {
    validate_risks(risks);
    MomentSummary out;
    out.n = risks.size();
    out.mean = risks.mean();
    out.variance = (risks - out.mean).square().sum() / static_cast<double>(out.n);
    return out;
}

double sample_variance(const Eigen::Ref<const Eigen::ArrayXd>& risks) {
    validate_risks(risks);
    const Eigen::Index n = risks.size();
    if (n < 2) throw std::invalid_argument("sample variance needs at least two observations");
    const double mean = risks.mean();
    return (risks - mean).square().sum() / static_cast<double>(n - 1);
}

double conditional_or_exact(const LabeledCohort& cohort) {
    validate_labeled(cohort);
    const Eigen::Index n = cohort.risks.size();
    const double events = cohort.outcomes.cast<double>().sum();
    if (events == 0.0 || events == static_cast<double>(n)) {
        throw std::domain_error("conditional_or_exact: outcomes are all 0 or all 1");
    }

    const Eigen::ArrayXd y = cohort.outcomes.cast<double>();
    const Eigen::ArrayXd offsets = (cohort.risks / (1.0 - cohort.risks)).log();
    const double tol = 1e-10 * static_cast<double>(n);

    const auto score_at = [&](double a) {
        const Eigen::ArrayXd p = 1.0 / (1.0 + (-(offsets + a)).exp());
        return std::make_pair((y - p).sum(), (p * (1.0 - p)).sum());
    };

    double a = 0.0;
    auto [score, info] = score_at(a);
    for (int it = 0; it < 100; ++it) {
        if (std::abs(score) < tol) return std::exp(a);
        double step = score / info;  // score' = -info, Newton ascent
        // step-halving keeps |score| decreasing, so the iteration cannot cycle
        for (int half = 0; half < 60; ++half) {
            const auto [s2, i2] = score_at(a + step);
            if (std::abs(s2) < std::abs(score)) {
                a += step;
                score = s2;
                info = i2;
                break;
            }
            step *= 0.5;
        }
    }
    if (std::abs(score) < tol) return std::exp(a);
    std::ostringstream msg;
    msg << "conditional_or_exact: no convergence after 100 iterations; last intercept " << a
        << " (odds-ratio " << std::exp(a) << "), score " << score;
    throw std::runtime_error(msg.str());
}

double population_or(const Eigen::Ref<const Eigen::ArrayXd>& risks, double p1) {
    validate_risks(risks);
    detail::require_probability(p1, "p1");

    const auto residual = [&](double x) {
        return (risks * x / (1.0 - risks + risks * x)).mean() - p1;
    };
    // mean updated risk is strictly increasing in x and sweeps (0,1)
    const double seed = marginal_or(risks.mean(), p1);
    const auto [lo, hi] = expand_bracket(residual, seed);
    if (lo == hi) return lo;
    return bisect(residual, lo, hi, 1e-12);
}

}  // namespace recal
