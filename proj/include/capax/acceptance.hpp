#pragma once

#include <string>
#include <vector>

namespace capax {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double worst = 0.0;       // worst measured residual
    double tolerance = 0.0;
    std::string detail;
};

// Runs the acceptance criteria (all, or those whose name contains filter);
// each result carries the measured residual and the pinned tolerance.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

// Prints one pass/fail line per criterion; returns true iff all pass.
bool print_acceptance(const std::vector<CriterionResult>& results);

} // namespace capax
