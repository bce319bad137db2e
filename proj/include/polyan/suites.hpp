#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyan/report.hpp"

namespace polyan {

struct SuiteResult {
    std::string suite;
    int trials = 0;
    int passes = 0;
    int regenerated = 0;  // draws replaced after failing their hypothesis checks
    double worst_margin = 0.0;
    std::vector<BoundReport> failures;  // in trial order
};

// Known names: landau-univalence, landau-covering, bohr, distance, arclength,
// moments, area, linkage, calculus. Trials split deterministically from `seed`;
// results do not depend on thread count.
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      std::size_t truncation = 64);

const std::vector<std::string>& suite_names();

}  // namespace polyan
