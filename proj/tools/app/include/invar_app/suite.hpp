#pragma once

#include <string>
#include <vector>

#include "invar_app/config.hpp"

namespace invar::app {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;
    double seconds = 0;
};

std::vector<int> criterion_ids();  // 1..13
std::string criterion_title(int id);
// Exceptions inside a check become a failing result that names them.
CriterionResult run_criterion(int id, const RunConfig& cfg);

// "PASS  3  title (1.20 s)"
std::string summary_line(const CriterionResult& r, bool timings = true);

}  // namespace invar::app
