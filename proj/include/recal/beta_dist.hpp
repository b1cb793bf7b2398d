#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "recal/quadrature.hpp"

namespace recal {

struct BetaParams {
    double alpha = 1.0;
    double beta = 1.0;
};

void validate_beta(const BetaParams& params);

double beta_mean(const BetaParams& params);
double beta_variance(const BetaParams& params);

/// Method-of-moments fit: with c = mean(1-mean)/variance - 1,
/// alpha = mean*c and beta = (1-mean)*c. Requires 0 < variance < mean*(1-mean).
BetaParams beta_from_moments(double mean, double variance);

/// n independent beta draws, deterministic given the seed. Values are
/// truncated to the largest representable open interval, so they are always
/// valid risks.
Eigen::ArrayXd sample_beta(const BetaParams& params, Eigen::Index n, std::uint64_t seed);

/// Exact mean updated risk E f(pi, x) for pi ~ beta(alpha, beta), by a
/// 256-node Gauss rule with the beta density absorbed into the weights.
double expected_updated_mean(const BetaParams& params, double x);

/// Variant reusing a prebuilt beta_expectation_rule(alpha, beta) rule.
double expected_updated_mean(const QuadratureRule& rule, double x);

/// Inverse of expected_updated_mean in x: the odds-ratio whose application
/// moves the distribution mean to p1. Monotone bisection, 1e-12 in x.
double exact_or_beta(const BetaParams& params, double p1);

/// Population AUC of outcomes y ~ Bernoulli(pi), pi ~ beta(alpha, beta):
/// P(pi+ > pi-) with pi+ ~ beta(alpha+1, beta) and pi- ~ beta(alpha, beta+1),
/// computed as the 256-node Gauss expectation of the pi- CDF under pi+.
double auc_beta(const BetaParams& params);

}  // namespace recal
