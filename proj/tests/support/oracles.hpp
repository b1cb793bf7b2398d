// Brute-force reference implementations for tests. Everything here is
// deliberately simple and independent of the library's solvers: roots come
// from plain sign-change sweeps, likelihoods from grid scans, AUC from
// explicit pair counting.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace oracles {

// 53-bit uniform in [0,1); avoids std distributions so sequences are
// identical on every standard library.
inline double uniform01(std::mt19937_64& eng) { return (eng() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

/// All roots of f on [lo, hi] located by an even sweep over `cells` cells
/// followed by plain bisection inside each sign-change cell.
template <class F>
std::vector<double> sweep_roots(F&& f, double lo, double hi, int cells = 20000,
                                double xtol = 1e-13) {
    std::vector<double> roots;
    double xa = lo, fa = f(xa);
    for (int i = 1; i <= cells; ++i) {
        const double xb = lo + (hi - lo) * i / cells;
        const double fb = f(xb);
        if (fa == 0.0) {
            roots.push_back(xa);
        } else if (fa * fb < 0.0) {
            double a = xa, b = xb, va = fa;
            while (b - a > xtol) {
                const double m = 0.5 * (a + b);
                if (m <= a || m >= b) break;
                const double vm = f(m);
                if (vm == 0.0) {
                    a = b = m;
                    break;
                }
                if (va * vm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    va = vm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) roots.push_back(xa);
    return roots;
}

/// Bernoulli log-likelihood of the offset-logistic intercept model.
inline double offset_loglik(const Eigen::ArrayXd& risks, const Eigen::ArrayXi& outcomes,
                            double intercept) {
    double ll = 0.0;
    for (Eigen::Index i = 0; i < risks.size(); ++i) {
        const double z = std::log(risks[i] / (1.0 - risks[i])) + intercept;
        const double p = 1.0 / (1.0 + std::exp(-z));
        ll += outcomes[i] == 1 ? std::log(p) : std::log(1.0 - p);
    }
    return ll;
}

/// Maximizes offset_loglik over intercept in [lo, hi]: coarse grid scan, then
/// golden-section refinement around the best cell.
inline double max_loglik_intercept(const Eigen::ArrayXd& risks, const Eigen::ArrayXi& outcomes,
                                   double lo = -5.0, double hi = 5.0) {
    const int kGrid = 2000;
    double best = lo, best_ll = offset_loglik(risks, outcomes, lo);
    for (int i = 1; i <= kGrid; ++i) {
        const double a = lo + (hi - lo) * i / kGrid;
        const double ll = offset_loglik(risks, outcomes, a);
        if (ll > best_ll) {
            best_ll = ll;
            best = a;
        }
    }
    double a = best - (hi - lo) / kGrid, b = best + (hi - lo) / kGrid;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = offset_loglik(risks, outcomes, c), fd = offset_loglik(risks, outcomes, d);
    for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = offset_loglik(risks, outcomes, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = offset_loglik(risks, outcomes, d);
        }
    }
    return 0.5 * (a + b);
}

/// AUC by exhaustive pair counting with half credit for ties.
inline double auc_pair_count(const Eigen::ArrayXd& risks, const Eigen::ArrayXi& outcomes) {
    double concordant = 0.0;
    long long pairs = 0;
    for (Eigen::Index i = 0; i < risks.size(); ++i) {
        if (outcomes[i] != 1) continue;
        for (Eigen::Index j = 0; j < risks.size(); ++j) {
            if (outcomes[j] != 0) continue;
            ++pairs;
            if (risks[i] > risks[j]) {
                concordant += 1.0;
            } else if (risks[i] == risks[j]) {
                concordant += 0.5;
            }
        }
    }
    return concordant / static_cast<double>(pairs);
}

}  // namespace oracles
