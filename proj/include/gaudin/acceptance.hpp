#pragma once

#include <string>
#include <vector>

namespace gaudin {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;         ///< all checks held and the run met its budget
    std::string detail;  ///< counts, or the first failures
    double seconds;
    double budget;       ///< seconds
};

/// Number of acceptance criteria; ids run from 1 to this value.
constexpr int kCriterionCount = 7;

CriterionResult run_criterion(int id, unsigned jobs = 1);
std::vector<CriterionResult> run_acceptance(unsigned jobs = 1);

/// "PASS [3] title (0.41 s / 30 s): detail"
std::string format_line(const CriterionResult& r);

} // namespace gaudin
