#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace polyan {

// Hypothesis flags attached to a verified inequality. Checks that do not use a
// given hypothesis leave its flag true. Two checks reuse a slot with a
// documented meaning: for check_distance_bound, univalent_base records
// injectivity of the base component's boundary sample; for min_area_check,
// orientation_preserving records the Re(conj(z) A' conj(B')) >= 0 grid test.
struct HypothesisFlags {
    bool orientation_preserving = true;
    bool image_in_disk = true;
    bool univalent_base = true;
    bool omits_two_points = true;

    bool all() const {
        return orientation_preserving && image_in_disk && univalent_base && omits_two_points;
    }
};

// margin is the slack of the claim being verified, oriented so that margin >= 0
// means the claim holds: rhs - lhs for <=-type claims, lhs - rhs for >=-type.
struct BoundReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    HypothesisFlags flags;
    std::uint64_t seed = 0;
    bool pass = false;
    std::map<std::string, double> details;
};

struct RadiusResult {
    double radius = 0.0;
    double residual = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

}  // namespace polyan
