#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace recal {

/// One (p0, delta) panel: target mean p1 = p0*(1+delta), evaluated over a
/// grid of predicted-risk variances.
struct ScenarioConfig {
    double p0 = 0.0;
    double delta = 0.0;
    Eigen::ArrayXd variance_grid;
    int mc_n = 0;          // Monte Carlo cross-check sample size; 0 disables
    std::uint64_t seed = 0;
};

struct ScenarioRow {
    double p0 = 0.0;
    double delta = 0.0;
    double p1 = 0.0;
    double variance = 0.0;
    double auc = 0.0;
    double or_exact = 0.0;
    double or_simple = 0.0;
    double or_taylor = 0.0;
    double relbias_simple = 0.0;  // or_simple/or_exact - 1
    double relbias_taylor = 0.0;
    // Monte Carlo re-estimate of or_exact from a seeded sample (mc_n > 0 only)
    double or_mc = 0.0;
    bool has_mc = false;
};

struct ScenarioWarning {
    double p0 = 0.0;
    double delta = 0.0;
    double variance = 0.0;
    std::string message;
};

struct ScenarioResult {
    std::vector<ScenarioRow> rows;
    std::vector<ScenarioWarning> warnings;
};

/// Linearly spaced grid over (0.001, 0.95) * p0*(1-p0).
Eigen::ArrayXd default_variance_grid(double p0, int points = 20);

/// Evaluates one panel: beta fit per grid variance, the three odds-ratios,
/// the population AUC, and relative biases against the exact odds-ratio.
/// Grid variances that do not admit a beta fit are skipped with a warning;
/// an out-of-range p1 throws.
ScenarioResult run_scenario(const ScenarioConfig& config);

/// The default bias-comparison experiment: p0 in {0.1, 0.25, 0.5} crossed
/// with delta in {-0.5, -0.25, -0.1, +0.1, +0.25, +0.5} (pairs with p1
/// outside (0,1) are skipped), each over a 20-point default variance grid.
/// Rows come back ordered by (p0, delta, variance).
ScenarioResult figure_grid(int grid_points = 20, int mc_n = 0, std::uint64_t seed = 0);

}  // namespace recal
