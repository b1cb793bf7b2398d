// recal: recalibrate binary-outcome risk predictions by a fixed odds-ratio.
//
// Subcommands: adjust, fit, apply, moments, simulate. Data goes to stdout or
// --out, diagnostics to stderr. Exit code 0 on success, 2 on usage, domain,
// or data errors.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recal/auc.hpp"
#include "recal/beta_dist.hpp"
#include "recal/cohort.hpp"
#include "recal/csv.hpp"
#include "recal/odds.hpp"
#include "recal/rng.hpp"
#include "recal/simulation.hpp"
#include "recal/taylor.hpp"

namespace {

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot write '" + path + "'");
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

std::string fmt(double v, int digits) { return recal::format_double(v, digits); }

void warn_ambiguous(const recal::RootSelection& sel) {
    if (!sel.ambiguous) return;
    std::cerr << "warning: several admissible odds-ratios survived root filtering:";
    for (double r : sel.survivors) std::cerr << ' ' << r;
    std::cerr << "; reporting the one closest to the marginal odds-ratio in log space\n";
}

int cmd_adjust(double p0, double p1, double variance, bool has_variance,
               const std::string& method, const std::string& out_path, int digits) {
    const bool want_simple = method == "simple" || method == "both";
    const bool want_taylor = method == "taylor" || method == "both";
    if (want_taylor && !has_variance) {
        throw std::runtime_error("--v is required for the taylor method");
    }
    std::string body;
    if (want_simple) {
        body += "simple," + fmt(recal::marginal_or(p0, p1), digits) + '\n';
    }
    if (want_taylor) {
        recal::RootSelection sel;
        const double value = recal::taylor_or(recal::CalibrationTask{p0, p1, variance}, &sel);
        warn_ambiguous(sel);
        body += "taylor," + fmt(value, digits) + '\n';
    }
    OutputTarget target;
    target.open(out_path);
    target.out() << "method,odds_ratio\n" << body;
    return 0;
}

int cmd_fit(const std::string& path, bool use_sample_variance, const std::string& out_path,
            int digits) {
    const recal::RiskFile file = recal::read_risk_file_path(path);
    if (!file.labeled()) {
        throw std::runtime_error(path + ": fit requires a 'risk,outcome' file");
    }
    const recal::LabeledCohort cohort = file.labeled_cohort();
    const recal::MomentSummary mom = recal::moments(cohort.risks);
    const double event_rate = cohort.outcomes.cast<double>().mean();
    const double variance =
        use_sample_variance ? recal::sample_variance(cohort.risks) : mom.variance;

    const double exact = recal::conditional_or_exact(cohort);
    const double simple = recal::marginal_or(mom.mean, event_rate);
    recal::RootSelection sel;
    const double taylor =
        recal::taylor_or(recal::CalibrationTask{mom.mean, event_rate, variance}, &sel);
    warn_ambiguous(sel);

    OutputTarget target;
    target.open(out_path);
    target.out() << "method,odds_ratio\n";
    target.out() << "exact," << fmt(exact, digits) << '\n';
    target.out() << "simple," << fmt(simple, digits) << '\n';
    target.out() << "taylor," << fmt(taylor, digits) << '\n';
    target.out() << '\n';
    target.out() << "statistic,value\n";
    target.out() << "mean," << fmt(mom.mean, digits) << '\n';
    target.out() << "variance," << fmt(variance, digits) << '\n';
    target.out() << "n," << mom.n << '\n';
    return 0;
}

int cmd_apply(const std::string& path, double odds_ratio, const std::string& out_path,
              int digits) {
    const recal::RiskFile file = recal::read_risk_file_path(path);
    const Eigen::ArrayXd updated = recal::apply_update(file.risks, odds_ratio);

    OutputTarget target;
    target.open(out_path);
    if (file.labeled()) {
        target.out() << "risk,outcome,updated_risk\n";
        for (Eigen::Index i = 0; i < file.risks.size(); ++i) {
            target.out() << fmt(file.risks[i], digits) << ',' << (*file.outcomes)[i] << ','
                         << fmt(updated[i], digits) << '\n';
        }
    } else {
        target.out() << "risk,updated_risk\n";
        for (Eigen::Index i = 0; i < file.risks.size(); ++i) {
            target.out() << fmt(file.risks[i], digits) << ',' << fmt(updated[i], digits) << '\n';
        }
    }
    return 0;
}

int cmd_moments(const std::string& path, const std::string& out_path, int digits) {
    const recal::RiskFile file = recal::read_risk_file_path(path);
    const recal::MomentSummary mom = recal::moments(file.risks);

    std::vector<double> sorted(file.risks.data(), file.risks.data() + file.risks.size());
    std::sort(sorted.begin(), sorted.end());
    const auto quantile = [&](double q) {
        // type-7: linear interpolation between order statistics
        const double h = q * static_cast<double>(sorted.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(h);
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
    };

    OutputTarget target;
    target.open(out_path);
    target.out() << "statistic,value\n";
    target.out() << "mean," << fmt(mom.mean, digits) << '\n';
    target.out() << "variance_population," << fmt(mom.variance, digits) << '\n';
    if (mom.n >= 2) {
        target.out() << "variance_sample," << fmt(recal::sample_variance(file.risks), digits)
                     << '\n';
    } else {
        target.out() << "variance_sample,NA\n";
    }
    target.out() << "n," << mom.n << '\n';
    target.out() << "q1," << fmt(quantile(0.25), digits) << '\n';
    target.out() << "median," << fmt(quantile(0.5), digits) << '\n';
    target.out() << "q3," << fmt(quantile(0.75), digits) << '\n';
    return 0;
}

int cmd_simulate(const std::vector<double>& p0_list, const std::vector<double>& delta_list,
                 int grid_points, bool mc_check, int mc_n, std::uint64_t seed, bool log_bias,
                 const std::string& out_path, int digits) {
    recal::ScenarioResult all;
    std::uint64_t panel = 0;
    for (double p0 : p0_list) {
        for (double delta : delta_list) {
            ++panel;
            const double p1 = p0 * (1.0 + delta);
            if (!(p1 > 0.0 && p1 < 1.0)) {
                std::cerr << "warning: skipping p0=" << p0 << " delta=" << delta
                          << " (target mean outside (0,1))\n";
                continue;
            }
            recal::ScenarioConfig config;
            config.p0 = p0;
            config.delta = delta;
            config.variance_grid = recal::default_variance_grid(p0, grid_points);
            config.mc_n = mc_check ? mc_n : 0;
            config.seed = recal::derive_stream_seed(seed, panel);
            const recal::ScenarioResult one = recal::run_scenario(config);
            all.rows.insert(all.rows.end(), one.rows.begin(), one.rows.end());
            all.warnings.insert(all.warnings.end(), one.warnings.begin(), one.warnings.end());
        }
    }

    for (const auto& w : all.warnings) {
        std::cerr << "warning: skipped p0=" << w.p0 << " delta=" << w.delta
                  << " variance=" << w.variance << ": " << w.message << '\n';
    }

    OutputTarget target;
    target.open(out_path);
    target.out() << "p0,delta,p1,variance,auc,or_exact,or_simple,or_taylor,"
                    "relbias_simple,relbias_taylor";
    if (log_bias) target.out() << ",logbias_simple,logbias_taylor";
    target.out() << '\n';
    for (const auto& r : all.rows) {
        target.out() << fmt(r.p0, digits) << ',' << fmt(r.delta, digits) << ',' << fmt(r.p1, digits)
                     << ',' << fmt(r.variance, digits) << ',' << fmt(r.auc, digits) << ','
                     << fmt(r.or_exact, digits) << ',' << fmt(r.or_simple, digits) << ','
                     << fmt(r.or_taylor, digits) << ',' << fmt(r.relbias_simple, digits) << ','
                     << fmt(r.relbias_taylor, digits);
        if (log_bias) {
            target.out() << ',' << fmt(std::log(r.or_simple / r.or_exact), digits) << ','
                         << fmt(std::log(r.or_taylor / r.or_exact), digits);
        }
        target.out() << '\n';
    }

    if (mc_check) {
        double worst = 0.0;
        for (const auto& r : all.rows) {
            if (!r.has_mc) continue;
            worst = std::max(worst, std::abs(std::log(r.or_mc / r.or_exact)));
        }
        std::cerr << "mc-check: max |log(or_mc/or_exact)| over " << all.rows.size()
                  << " rows with n=" << mc_n << " draws: " << worst << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Odds-ratio recalibration of binary risk predictions"};
    app.require_subcommand(1);
    app.fallthrough();  // --out/--digits/--seed may follow the subcommand

    std::string out_path;
    int digits = 17;
    std::uint64_t seed = 20260810;
    app.add_option("--out", out_path, "Write data output to this file instead of stdout");
    app.add_option("--digits", digits, "Significant digits for numeric output (1-17)");
    app.add_option("--seed", seed, "Base seed for randomized cross-checks");

    // adjust
    auto* adjust = app.add_subcommand(
        "adjust", "Odds-ratio from summary statistics (mean p0 -> target p1)");
    double p0 = 0.0, p1 = 0.0, variance = 0.0;
    std::string method = "both";
    adjust->add_option("--p0", p0, "Observed mean predicted risk")->required();
    adjust->add_option("--p1", p1, "Target mean risk")->required();
    auto* vopt = adjust->add_option("--v", variance, "Variance of predicted risks");
    adjust->add_option("--method", method, "simple, taylor, or both")
        ->check(CLI::IsMember({"simple", "taylor", "both"}));

    // fit
    auto* fit = app.add_subcommand(
        "fit", "Exact, simple, and taylor odds-ratios from a risk,outcome file");
    std::string fit_path;
    bool use_sample_variance = false;
    fit->add_option("file", fit_path, "CSV with header risk,outcome")->required();
    fit->add_flag("--sample-variance", use_sample_variance,
                  "Use the n-1 variance estimate for the taylor method");

    // apply
    auto* apply = app.add_subcommand("apply", "Apply an odds-ratio to every risk in a file");
    std::string apply_path;
    double apply_or_value = 0.0;
    apply->add_option("file", apply_path, "CSV with header risk or risk,outcome")->required();
    apply->add_option("--or", apply_or_value, "Odds-ratio to apply")->required();

    // moments
    auto* mom = app.add_subcommand("moments", "Mean, variance, and quartiles of a risk file");
    std::string mom_path;
    mom->add_option("file", mom_path, "CSV with header risk or risk,outcome")->required();

    // simulate
    auto* sim = app.add_subcommand(
        "simulate", "Bias comparison of the simple/taylor/exact odds-ratios over variance grids");
    std::vector<double> p0_list{0.1, 0.25, 0.5};
    std::vector<double> delta_list{-0.5, -0.25, -0.1, 0.1, 0.25, 0.5};
    int grid_points = 20;
    bool mc_check = false;
    bool log_bias = false;
    int mc_n = 100000;
    sim->add_option("--p0", p0_list, "Panel means");
    sim->add_option("--delta", delta_list, "Relative target changes (e.g. -0.25)");
    sim->add_option("--grid", grid_points, "Variance grid points per panel");
    sim->add_flag("--mc-check", mc_check, "Re-estimate or_exact from seeded samples (stderr)");
    sim->add_option("--mc-n", mc_n, "Sample size for --mc-check");
    sim->add_flag("--log-bias", log_bias, "Append log-scale bias columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        app.exit(err);
        return 2;
    }

    try {
        if (*adjust) {
            return cmd_adjust(p0, p1, variance, vopt->count() > 0, method, out_path, digits);
        }
        if (*fit) return cmd_fit(fit_path, use_sample_variance, out_path, digits);
        if (*apply) return cmd_apply(apply_path, apply_or_value, out_path, digits);
        if (*mom) return cmd_moments(mom_path, out_path, digits);
        if (*sim) {
            return cmd_simulate(p0_list, delta_list, grid_points, mc_check, mc_n, seed, log_bias,
                                out_path, digits);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
