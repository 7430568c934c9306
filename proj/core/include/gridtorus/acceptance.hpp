#pragma once
// The acceptance suite: ten criteria, each checked against an oracle that
// does not go through the code path under test where that is possible.

#include <string>
#include <vector>

namespace gridtorus {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    /// First failure, or a short summary of what was checked.
    std::string detail;
    double millis = 0.0;
};

inline constexpr int kCriterionCount = 10;

std::string criterion_name(int id);
/// Throws std::out_of_range for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id);
/// Runs every criterion; threads > 1 spreads them over worker threads.
std::vector<CriterionResult> run_acceptance(unsigned threads = 1);
/// "criterion 3 [P1xP1xP1 localization]: PASS (...)"
std::string format_result(const CriterionResult& r);

}  // namespace gridtorus
