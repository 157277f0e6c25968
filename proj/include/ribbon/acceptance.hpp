#pragma once

#include <string>
#include <vector>

namespace ribbon {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

// Runs the full acceptance suite (nine criteria; a tenth informational
// entry when stretch is set). Each criterion fails if its checks fail or
// its time budget is exceeded.
std::vector<CriterionResult> run_acceptance(int jobs = 1,
                                            bool stretch = false);

// One line per criterion: "PASS 3 covering-relation (0.01s) detail".
void print_acceptance(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace ribbon
