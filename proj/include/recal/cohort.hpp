#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace recal {

/// Predicted risks paired with observed binary outcomes.
struct LabeledCohort {
    Eigen::ArrayXd risks;
    Eigen::ArrayXi outcomes;  // 0/1, same length as risks
};

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;  // population variance (divide by n)
    Eigen::Index n = 0;
};

/// Throws unless risks is nonempty with every element strictly in (0,1).
void validate_risks(const Eigen::Ref<const Eigen::ArrayXd>& risks);

/// Throws unless the cohort is valid and outcomes are 0/1 of matching length.
void validate_labeled(const LabeledCohort& cohort);

/// Mean and population variance of a cohort of risks.
MomentSummary moments(const Eigen::Ref<const Eigen::ArrayXd>& risks);

/// Unbiased (n-1) variance; throws for n < 2.
double sample_variance(const Eigen::Ref<const Eigen::ArrayXd>& risks);

/// Conditional odds-ratio exp(a*) where a* maximizes the Bernoulli likelihood
/// of the intercept-plus-offset logistic model logit(risk_i) + a. Solved by
/// damped Newton on the score sum(y_i - f(risk_i, e^a)); the score derivative
/// is strictly negative so the root is unique. Throws std::domain_error when
/// the outcomes are all 0 or all 1 (the MLE diverges).
double conditional_or_exact(const LabeledCohort& cohort);

/// Unique odds-ratio x with mean_i f(risk_i, x) = p1, by monotone bracketing
/// bisection with absolute tolerance 1e-12 in x.
double population_or(const Eigen::Ref<const Eigen::ArrayXd>& risks, double p1);

}  // namespace recal
