#pragma once

#include <functional>

#include "polyan/report.hpp"

namespace polyan {

struct RootOptions {
    double lo = 1e-9;
    double hi = 1.0 - 1e-9;
    double value_tol = 1e-12;
    int max_iter = 200;
};

// Bisection for a sign change of g on [lo, hi], refined until |g(mid)| <= value_tol.
// Throws std::domain_error when g has no sign change on the bracket and
// std::runtime_error when the iteration cap is hit first.
RadiusResult bisect(const std::function<double(double)>& g, const RootOptions& opt = {});

}  // namespace polyan
