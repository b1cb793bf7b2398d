#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace recal {

namespace detail {

inline void require_probability(double p, const char* name) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error(std::string(name) + " must lie strictly in (0,1), got " +
                                std::to_string(p));
    }
}

inline void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error(std::string(name) + " must be positive and finite, got " +
                                std::to_string(x));
    }
}

}  // namespace detail

/// Log-odds of a probability strictly inside (0,1).
inline double logit(double p) {
    detail::require_probability(p, "probability");
    return std::log(p / (1.0 - p));
}

inline double inverse_logit(double z) {
    // numerically symmetric form, never overflows
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

/// Update a predicted risk by a fixed odds-ratio:
/// the odds of the result are x times the odds of pi.
inline double apply_or(double pi, double x) {
    detail::require_probability(pi, "pi");
    detail::require_positive(x, "odds-ratio");
    return pi * x / (1.0 - pi + pi * x);
}

/// Odds-ratio between two average risks: odds(p1) / odds(p0).
inline double marginal_or(double p0, double p1) {
    detail::require_probability(p0, "p0");
    detail::require_probability(p1, "p1");
    return (p1 / (1.0 - p1)) / (p0 / (1.0 - p0));
}

/// Elementwise odds-ratio update of a cohort of predicted risks.
inline Eigen::ArrayXd apply_update(const Eigen::Ref<const Eigen::ArrayXd>& risks, double x) {
    detail::require_positive(x, "odds-ratio");
    if (risks.size() == 0) throw std::invalid_argument("cohort must be nonempty");
    if (!((risks > 0.0).all() && (risks < 1.0).all())) {
        throw std::domain_error("all risks must lie strictly in (0,1)");
    }
    return risks * x / (1.0 - risks + risks * x);
}

}  // namespace recal
