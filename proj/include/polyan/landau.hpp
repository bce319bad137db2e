#pragma once

#include "polyan/polyfun.hpp"
#include "polyan/report.hpp"

namespace polyan {

// Univalence radius rho_1 for the class of order-alpha functions with
// normalized components (A_k(0) = 0, A_k'(0) = 1) bounded by M: the root in
// (0, 1) of
//   1 - M [rho(2 - rho) + sum_{k=1}^{alpha-1} rho^k (1 + k - rho)] / (1 - rho)^2.
// Requires M >= 1, alpha >= 2.
RadiusResult landau_rho(double M, int alpha);

// Covering radius attached to rho1:
//   R1 = rho1 - rho1^2 (1 - rho1^{alpha-1})/(1 - rho1)
//        - M sum_{k=0}^{alpha-1} rho1^{k+2}/(1 - rho1).
// May be <= 0, in which case the covering claim is non-informative.
double landau_R(double rho1, double M, int alpha);

// Bi-analytic (alpha = 2) closed form 1 - sqrt(2M/(2M + 1)); residual reported
// against the alpha = 2 defining equation.
RadiusResult bianalytic_rho(double M);

// Evaluates F on a polar grid strictly inside |z| < rho and reports the minimum
// pairwise |F(z_i) - F(z_j)| / |z_i - z_j|; pass iff that minimum is positive.
// grid >= 8 radii and angles.
BoundReport check_injectivity(const PolyFunction& f, double rho, int grid);

// Samples min |F| on |z| = rho (with local refinement around the argmin) and
// passes iff it is >= R - 1e-9. Reports the minimum and its angle.
BoundReport check_covering(const PolyFunction& f, double rho, double R, int samples);

}  // namespace polyan
