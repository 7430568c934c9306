// One line per acceptance criterion; exit status 0 iff all pass.

#include "gridtorus/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

int main() {
    const auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (int id = 1; id <= gridtorus::kCriterionCount; ++id) {
        auto r = gridtorus::run_criterion(id);
        std::cout << gridtorus::format_result(r) << std::endl;
        all = all && r.passed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("total %.3f s, %s\n", secs, all ? "all criteria pass" : "some criteria fail");
    if (secs >= 5.0) {
        std::printf("time budget of 5 s exceeded\n");
        return 1;
    }
    return all ? 0 : 1;
}
