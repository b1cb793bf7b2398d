#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "recal/cohort.hpp"

namespace recal {

/// Parsed contents of a risk CSV. `header` keeps the source column names so
/// they can be echoed into derived files.
struct RiskFile {
    Eigen::ArrayXd risks;
    std::optional<Eigen::ArrayXi> outcomes;

    bool labeled() const { return outcomes.has_value(); }
    LabeledCohort labeled_cohort() const;
};

/// Reads a `risk` or `risk,outcome` CSV (header required, UTF-8, '.' decimal
/// separator, LF or CRLF). Risks must parse as decimals strictly inside
/// (0,1); values within 1e-15 of an endpoint are rejected. Outcomes must be
/// 0 or 1. Parse errors report the offending 1-based line number.
RiskFile read_risk_file(std::istream& in);
RiskFile read_risk_file_path(const std::string& path);

/// %.{digits}g formatting; digits defaults to full round-trip precision.
std::string format_double(double value, int digits = 17);

}  // namespace recal
