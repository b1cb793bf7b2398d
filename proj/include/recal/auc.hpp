#pragma once

#include "recal/cohort.hpp"

namespace recal {

/// Mann-Whitney AUC with half credit for ties, computed from a single sort
/// in O(n log n). Requires at least one positive and one negative outcome.
double auc_empirical(const LabeledCohort& cohort);

}  // namespace recal
