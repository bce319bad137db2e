#include "polyan/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "polyan/kernels.hpp"

namespace polyan {

QuadratureError::QuadratureError(double prev, double last_)
    : std::runtime_error("quadrature did not converge; last estimates " + std::to_string(prev) +
                         " and " + std::to_string(last_)),
      previous(prev),
      last(last_) {}

std::vector<GLNode> gauss_legendre(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre: n < 1");
    std::vector<GLNode> nodes(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton from the Chebyshev-angle estimate of the i-th root of P_n
        double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = {-x, w};
        nodes[n - 1 - i] = {x, w};
    }
    return nodes;
}

double integrate_circle(const std::function<double(double)>& f, int panels) {
    if (panels < 1) throw std::domain_error("integrate_circle: panels < 1");
    const double h = 2.0 * std::numbers::pi / double(panels);
    const double s = kernels::sum_indexed(std::size_t(panels),
                                          [&](std::size_t j) { return f(h * double(j)); });
    return s * h;
}

QuadValue integrate_circle_refined(const std::function<double(double)>& f,
                                   const QuadratureConfig& q) {
    int panels = std::max(q.circle_panels, 4);
    double prev = integrate_circle(f, panels);
    for (int level = 0; level < q.refinement_levels; ++level) {
        panels *= 2;
        const double cur = integrate_circle(f, panels);
        if (std::abs(cur - prev) <= q.tolerance) return {cur, panels};
        prev = cur;
    }
    throw QuadratureError(prev, integrate_circle(f, panels * 2));
}

namespace {

double disk_pass(const std::function<double(double, double)>& g, double r, int radial,
                 int angular) {
    const auto nodes = gauss_legendre(radial);
    const double h = 2.0 * std::numbers::pi / double(angular);
    // theta-inner blocks keep the summation order fixed per (radial, angular) pair
    double total = 0.0;
    for (const GLNode& nd : nodes) {
        const double rho = 0.5 * r * (nd.x + 1.0);
        const double s = kernels::sum_indexed(
            std::size_t(angular), [&](std::size_t j) { return g(rho, h * double(j)); });
        total += nd.w * (0.5 * r) * s * h;
    }
    return total;
}

}  // namespace

QuadValue integrate_disk_refined(const std::function<double(double, double)>& g, double r,
                                 const QuadratureConfig& q) {
    if (!(r >= 0.0)) throw std::domain_error("integrate_disk_refined: r < 0");
    if (r == 0.0) return {0.0, q.circle_panels};
    int radial = std::max(q.radial_panels, 2);
    int angular = std::max(q.circle_panels, 4);
    double prev = disk_pass(g, r, radial, angular);
    for (int level = 0; level < q.refinement_levels; ++level) {
        radial *= 2;
        angular *= 2;
        const double cur = disk_pass(g, r, radial, angular);
        if (std::abs(cur - prev) <= q.tolerance) return {cur, angular};
        prev = cur;
    }
    throw QuadratureError(prev, disk_pass(g, r, radial * 2, angular * 2));
}

}  // namespace polyan
