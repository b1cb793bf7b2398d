#include "recal/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace recal {

LabeledCohort RiskFile::labeled_cohort() const {
    if (!outcomes) throw std::invalid_argument("risk file has no outcome column");
    return LabeledCohort{risks, *outcomes};
}

namespace {

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

std::string strip_eol_and_bom(std::string line, bool first) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' && line[2] == '\xBF') {
        line.erase(0, 3);
    }
    return line;
}

double parse_risk(const std::string& field, std::size_t line_no) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &consumed);
    } catch (const std::exception&) {
        fail_at(line_no, "cannot parse risk '" + field + "'");
    }
    if (consumed != field.size()) fail_at(line_no, "trailing characters in risk '" + field + "'");
    if (!std::isfinite(value) || value <= 0.0 || value >= 1.0 || value < 1e-15 ||
        value > 1.0 - 1e-15) {
        fail_at(line_no, "risk " + field + " is not strictly inside (0,1)");
    }
    return value;
}

int parse_outcome(const std::string& field, std::size_t line_no) {
    if (field == "0") return 0;
    if (field == "1") return 1;
    fail_at(line_no, "outcome '" + field + "' is not 0 or 1");
}

}  // namespace

RiskFile read_risk_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("line 1: empty input, header expected");
    line = strip_eol_and_bom(line, true);

    bool labeled = false;
    if (line == "risk") {
        labeled = false;
    } else if (line == "risk,outcome") {
        labeled = true;
    } else {
        throw std::runtime_error("line 1: header must be 'risk' or 'risk,outcome', got '" + line +
                                 "'");
    }

    std::vector<double> risks;
    std::vector<int> outcomes;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_eol_and_bom(line, false);
        if (line.empty()) continue;  // tolerate a trailing blank line
        const std::size_t comma = line.find(',');
        if (labeled) {
            if (comma == std::string::npos) fail_at(line_no, "expected 'risk,outcome'");
            if (line.find(',', comma + 1) != std::string::npos) fail_at(line_no, "too many fields");
            risks.push_back(parse_risk(line.substr(0, comma), line_no));
            outcomes.push_back(parse_outcome(line.substr(comma + 1), line_no));
        } else {
            if (comma != std::string::npos) fail_at(line_no, "expected a single risk field");
            risks.push_back(parse_risk(line, line_no));
        }
    }
    if (risks.empty()) throw std::runtime_error("no data rows");

    RiskFile out;
    out.risks = Eigen::Map<const Eigen::ArrayXd>(risks.data(), static_cast<Eigen::Index>(risks.size()));
    if (labeled) {
        out.outcomes = Eigen::Map<const Eigen::ArrayXi>(outcomes.data(),
                                                        static_cast<Eigen::Index>(outcomes.size()));
    }
    return out;
}

RiskFile read_risk_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_risk_file(in);
    } catch (const std::exception& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

std::string format_double(double value, int digits) {
    if (digits < 1) digits = 1;
    if (digits > 17) digits = 17;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

}  // namespace recal
