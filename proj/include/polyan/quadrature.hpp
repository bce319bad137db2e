#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace polyan {

struct QuadratureConfig {
    int circle_panels = 256;      // starting angular panel count
    int radial_panels = 24;       // starting Gauss-Legendre node count
    int refinement_levels = 8;    // panel doublings before giving up
    double tolerance = 1e-10;     // |successive difference| stop
};

// Raised when panel doubling fails to converge; carries the last two estimates.
struct QuadratureError : std::runtime_error {
    QuadratureError(double prev, double last);
    double previous;
    double last;
};

struct GLNode {
    double x;  // abscissa on [-1, 1]
    double w;
};

std::vector<GLNode> gauss_legendre(int n);

struct QuadValue {
    double value = 0.0;
    int panels = 0;  // angular panel count at convergence
};

// Trapezoid rule for 2 pi periodic f; exact spacing 2 pi / panels.
double integrate_circle(const std::function<double(double)>& f, int panels);

// Doubles panels until successive estimates differ by <= q.tolerance.
QuadValue integrate_circle_refined(const std::function<double(double)>& f,
                                   const QuadratureConfig& q);

// Tensor quadrature of g(rho, theta) over [0, r] x [0, 2 pi), Gauss-Legendre in
// rho and trapezoid in theta, both refined together.
QuadValue integrate_disk_refined(const std::function<double(double, double)>& g, double r,
                                 const QuadratureConfig& q);

}  // namespace polyan
