#include "recal/beta_dist.hpp"

#include <cmath>
#include <stdexcept>

#include "recal/odds.hpp"
#include "recal/rng.hpp"
#include "recal/root_finding.hpp"
#include "recal/special.hpp"

namespace recal {

void validate_beta(const BetaParams& params) {
    if (!(params.alpha > 0.0) || !(params.beta > 0.0) || !std::isfinite(params.alpha) ||
        !std::isfinite(params.beta)) {
        throw std::domain_error("beta parameters must be positive and finite");
    }
}

double beta_mean(const BetaParams& params) {
    validate_beta(params);
    return params.alpha / (params.alpha + params.beta);
}

double beta_variance(const BetaParams& params) {
    validate_beta(params);
    const double s = params.alpha + params.beta;
    return params.alpha * params.beta / (s * s * (s + 1.0));
}

BetaParams beta_from_moments(double mean, double variance) {
    detail::require_probability(mean, "mean");
    if (!(variance > 0.0)) {
        throw std::domain_error("beta_from_moments: variance must be positive");
    }
    if (!(variance < mean * (1.0 - mean))) {
        throw std::domain_error(
            "beta_from_moments: variance must be below mean*(1-mean) for a beta fit");
    }
    const double c = mean * (1.0 - mean) / variance - 1.0;
    return BetaParams{mean * c, (1.0 - mean) * c};
}

Eigen::ArrayXd sample_beta(const BetaParams& params, Eigen::Index n, std::uint64_t seed) {
    validate_beta(params);
    if (n < 1) throw std::invalid_argument("sample_beta: n must be at least 1");
    Rng rng(seed);
    Eigen::ArrayXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = rng.beta(params.alpha, params.beta);
        out[i] = std::min(std::max(x, 1e-300), 1.0 - 1e-16);
    }
    return out;
}

double expected_updated_mean(const QuadratureRule& rule, double x) {
    detail::require_positive(x, "odds-ratio");
    return (rule.weights * rule.nodes * x / (1.0 - rule.nodes + rule.nodes * x)).sum();
}

double expected_updated_mean(const BetaParams& params, double x) {
    validate_beta(params);
    return expected_updated_mean(beta_expectation_rule(params.alpha, params.beta), x);
}

double exact_or_beta(const BetaParams& params, double p1) {
    validate_beta(params);
    detail::require_probability(p1, "p1");
    const QuadratureRule rule = beta_expectation_rule(params.alpha, params.beta);
    const auto residual = [&](double x) { return expected_updated_mean(rule, x) - p1; };
    const double seed = marginal_or(beta_mean(params), p1);
    const auto [lo, hi] = expand_bracket(residual, seed);
    if (lo == hi) return lo;
    return bisect(residual, lo, hi, 1e-12);
}

double auc_beta(const BetaParams& params) {
    validate_beta(params);
    // integrate the pi- CDF against the pi+ density (weights of the
    // (alpha+1, beta) rule); ties have probability zero
    const QuadratureRule rule = beta_expectation_rule(params.alpha + 1.0, params.beta);
    double auc = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        auc += rule.weights[i] * incomplete_beta(params.alpha, params.beta + 1.0, rule.nodes[i]);
    }
    return auc;
}

}  // namespace recal
