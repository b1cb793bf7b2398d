#include "recal/simulation.hpp"

#include <cmath>
#include <stdexcept>

#include "recal/beta_dist.hpp"
#include "recal/cohort.hpp"
#include "recal/odds.hpp"
#include "recal/rng.hpp"
#include "recal/taylor.hpp"

namespace recal {

Eigen::ArrayXd default_variance_grid(double p0, int points) {
    detail::require_probability(p0, "p0");
    if (points < 1) throw std::invalid_argument("variance grid needs at least one point");
    const double vmax = p0 * (1.0 - p0);
    return Eigen::ArrayXd::LinSpaced(points, 0.001 * vmax, 0.95 * vmax);
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    detail::require_probability(config.p0, "p0");
    const double p1 = config.p0 * (1.0 + config.delta);
    if (!(p1 > 0.0 && p1 < 1.0)) {
        throw std::domain_error("run_scenario: target mean p0*(1+delta) is outside (0,1)");
    }

    ScenarioResult result;
    const double or_simple = marginal_or(config.p0, p1);
    for (Eigen::Index i = 0; i < config.variance_grid.size(); ++i) {
        const double v = config.variance_grid[i];
        ScenarioRow row;
        row.p0 = config.p0;
        row.delta = config.delta;
        row.p1 = p1;
        row.variance = v;
        row.or_simple = or_simple;
        try {
            const BetaParams params = beta_from_moments(config.p0, v);
            row.or_exact = exact_or_beta(params, p1);
            row.or_taylor = taylor_or(CalibrationTask{config.p0, p1, v});
            row.auc = auc_beta(params);
            row.relbias_simple = row.or_simple / row.or_exact - 1.0;
            row.relbias_taylor = row.or_taylor / row.or_exact - 1.0;
            if (config.mc_n > 0) {
                const std::uint64_t row_seed =
                    derive_stream_seed(config.seed, static_cast<std::uint64_t>(i));
                const Eigen::ArrayXd sample =
                    sample_beta(params, config.mc_n, row_seed);
                row.or_mc = population_or(sample, p1);
                row.has_mc = true;
            }
        } catch (const std::exception& err) {
            result.warnings.push_back(
                ScenarioWarning{config.p0, config.delta, v, err.what()});
            continue;
        }
        result.rows.push_back(row);
    }
    return result;
}

ScenarioResult figure_grid(int grid_points, int mc_n, std::uint64_t seed) {
    static const double kP0[] = {0.1, 0.25, 0.5};
    static const double kDelta[] = {-0.5, -0.25, -0.1, 0.1, 0.25, 0.5};

    ScenarioResult all;
    std::uint64_t panel = 0;
    for (double p0 : kP0) {
        for (double delta : kDelta) {
            const double p1 = p0 * (1.0 + delta);
            ++panel;
            if (!(p1 > 0.0 && p1 < 1.0)) continue;
            ScenarioConfig config;
            config.p0 = p0;
            config.delta = delta;
            config.variance_grid = default_variance_grid(p0, grid_points);
            config.mc_n = mc_n;
            config.seed = derive_stream_seed(seed, panel);
            ScenarioResult one = run_scenario(config);
            all.rows.insert(all.rows.end(), one.rows.begin(), one.rows.end());
            all.warnings.insert(all.warnings.end(), one.warnings.begin(), one.warnings.end());
        }
    }
    return all;
}

}  // namespace recal
