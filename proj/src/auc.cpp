#include "recal/auc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace recal {

double auc_empirical(const LabeledCohort& cohort) {
    validate_labeled(cohort);
    const Eigen::Index n = cohort.risks.size();
    const long long npos = cohort.outcomes.cast<long long>().sum();
    const long long nneg = static_cast<long long>(n) - npos;
    if (npos == 0 || nneg == 0) {
        throw std::domain_error("auc_empirical: need both outcome classes");
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return cohort.risks[a] < cohort.risks[b];
    });

    // rank-sum with midranks over tied blocks
    double rank_sum_pos = 0.0;
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && cohort.risks[order[j + 1]] == cohort.risks[order[i]]) ++j;
        const double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (Eigen::Index k = i; k <= j; ++k) {
            if (cohort.outcomes[order[k]] == 1) rank_sum_pos += midrank;
        }
        i = j + 1;
    }
    const double u = rank_sum_pos - 0.5 * static_cast<double>(npos) * (npos + 1);
    return u / (static_cast<double>(npos) * static_cast<double>(nneg));
}

}  // namespace recal
