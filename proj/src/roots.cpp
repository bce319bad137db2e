#include "polyan/roots.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polyan {

RadiusResult bisect(const std::function<double(double)>& g, const RootOptions& opt) {
    double lo = opt.lo, hi = opt.hi;
    double glo = g(lo), ghi = g(hi);
    if (std::abs(glo) <= opt.value_tol)
        return {lo, glo, 0, lo, hi};
    if (std::abs(ghi) <= opt.value_tol)
        return {hi, ghi, 0, lo, hi};
    if ((glo > 0.0) == (ghi > 0.0))
        throw std::domain_error("bisect: no sign change on [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    for (int it = 1; it <= opt.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (std::abs(gm) <= opt.value_tol)
            return {mid, gm, it, lo, hi};
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    throw std::runtime_error("bisect: residual above tolerance after max iterations; bracket [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace polyan
