#pragma once

#include "polyan/polyfun.hpp"
#include "polyan/report.hpp"

namespace polyan {

// Radius below which the bound-function argument keeps majorant_poly(F, r) < 1
// for the admissible order-alpha class: root in (0, 1) of
//   Q(r) = sum_{j=3}^{alpha} r^j + 3r - 1.
// alpha = 2 gives exactly 1/3. Requires alpha >= 2.
RadiusResult bohr_radius(int alpha);

// r (1 - r^alpha) / (1 - r)^3, the majorant chain bound for the class.
double bohr_bound(int alpha, double r);

struct DistanceEstimate {
    double distance = 0.0;
    // false when distant boundary samples nearly coincide; the estimate may
    // then overshoot the true distance to the image boundary
    bool injective_boundary = true;
};

// min_theta |A(e^{i theta}) - A(0)| from `samples` boundary points plus
// golden-section refinement around the argmin. samples >= 256.
DistanceEstimate dist_to_boundary(const AnalyticSeries& a, int samples);

// Verifies majorant_poly(F, r) < 1 together with the class hypotheses:
// normalized univalent base (|A_0'(0)| <= 1, injectivity sampled), orientation
// |A_k'| < |A_0'| on a polar grid, boundary samples of |F| inside the closed
// unit disk.
BoundReport check_bohr(const PolyFunction& f, double r);

// The distance radius e^{-pi}.
extern const double kDistanceRadius;

// Verifies majorant_poly(F, r) <= (1 - r^alpha)/(1 - r) * dist(A_0(0), boundary
// of A_0(U)) for r <= e^{-pi}. Requires A_k(0) = 0 for k >= 1 (recorded in
// details as centered_components).
BoundReport check_distance_bound(const PolyFunction& f, double r);

}  // namespace polyan
