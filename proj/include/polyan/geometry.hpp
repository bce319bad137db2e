#pragma once

#include "polyan/polyfun.hpp"
#include "polyan/quadrature.hpp"
#include "polyan/report.hpp"

namespace polyan {

// max_theta |A(r e^{i theta})| from circle samples plus golden-section
// refinement around the argmax.
double max_modulus(const AnalyticSeries& a, double r, int samples = 1024);

// true iff Re(z A'(z)/A(z)) > 0 at every point of a grid x grid polar grid with
// radii up to rmax. Requires A(0) = 0 and A not identically zero. Truncated
// series of boundary-starlike functions can lose positivity near |z| = 1, so
// rmax is adjustable; the default matches the grid used by the suites.
bool is_starlike(const AnalyticSeries& a, int grid, double rmax = 1.0 - 1e-3);

// L(r) = integral over the circle |z| = r of |z F_z - conj(z) F_zbar| dtheta.
QuadValue arclength(const PolyFunction& f, double r, const QuadratureConfig& q = {});

// 2 pi M r/(1-r) [ (1+r)((alpha-1)r^alpha - alpha r^{alpha-1} + 1)/(1-r)^2 - 1
//                  + r^{alpha-1} ]
// for F = sum_{k=1}^{alpha-1} conj(z)^k A_k with starlike A_k bounded by M on
// |z| = r. alpha >= 2, r in [0, 1).
double arclength_bound(int alpha, double M, double r);

// M_p(r) = integral over |z| <= r of |F|^p J_F rho drho dtheta.
QuadValue moment_p(const PolyFunction& f, double r, double p, const QuadratureConfig& q = {});

// 2 pi r^{3p+6} / (3p + 6)
double moment_lower_bound(double p, double r);

// For bi-analytic F = conj(z) A + B with A = z phi, phi starlike univalent
// normalized, and Re(conj(z) A' conj(B')) >= 0: verifies
//   integral of J_F over |z| <= r  >=  pi r^6 / 3.
BoundReport min_area_check(const PolyFunction& f, double r, const QuadratureConfig& q = {});

// For Phi = z F with F = conj(z) A: checks on a shared polar grid that
// is_starlike(A) coincides with (J_Phi > 0 and Re((z Phi_z - conj(z)
// Phi_zbar)/Phi) > 0), and that the ratio equals z A'/A pointwise to 1e-10
// relative.
BoundReport linkage_check(const AnalyticSeries& a, int grid);

}  // namespace polyan
