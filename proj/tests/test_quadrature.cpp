#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyan/quadrature.hpp"

using namespace polyan;

TEST_CASE("gauss_legendre n = 5 nodes and weights") {
    const auto nodes = gauss_legendre(5);
    REQUIRE(nodes.size() == 5);
    CHECK(std::abs(nodes[0].x + 0.9061798459386640) < 1e-14);
    CHECK(std::abs(nodes[1].x + 0.5384693101056831) < 1e-14);
    CHECK(std::abs(nodes[2].x) < 1e-14);
    CHECK(std::abs(nodes[3].x - 0.5384693101056831) < 1e-14);
    CHECK(std::abs(nodes[4].x - 0.9061798459386640) < 1e-14);
    CHECK(std::abs(nodes[0].w - 0.2369268850561891) < 1e-14);
    CHECK(std::abs(nodes[1].w - 0.4786286704993665) < 1e-14);
    CHECK(std::abs(nodes[2].w - 0.5688888888888889) < 1e-14);

    // exact on degree <= 2n - 1
    double s = 0.0;
    for (const GLNode& nd : nodes) s += nd.w * (std::pow(nd.x, 8.0) + std::pow(nd.x, 3.0));
    CHECK(s == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

    CHECK_THROWS_AS(gauss_legendre(0), std::domain_error);
}

TEST_CASE("trapezoid is exact on low-order trigonometric polynomials") {
    const auto f = [](double th) { return 1.0 + std::cos(3.0 * th) - 0.5 * std::sin(7.0 * th); };
    const double v = integrate_circle(f, 16);
    CHECK(std::abs(v - 2.0 * std::numbers::pi) < 1e-13);
    CHECK_THROWS_AS(integrate_circle(f, 0), std::domain_error);
}

TEST_CASE("refined circle integral of exp(cos)") {
    QuadratureConfig q;
    const auto f = [](double th) { return std::exp(std::cos(th)); };
    const QuadValue v = integrate_circle_refined(f, q);
    CHECK(std::abs(v.value - 7.954926521012845) < 1e-10);
    CHECK(v.panels >= 512);
}

TEST_CASE("non-converging refinement throws with both estimates") {
    QuadratureConfig q;
    q.tolerance = 1e-300;
    q.refinement_levels = 2;
    const auto f = [](double th) { return std::abs(std::sin(th)); };
    bool threw = false;
    try {
        integrate_circle_refined(f, q);
    } catch (const QuadratureError& e) {
        threw = true;
        CHECK(std::abs(e.previous - 4.0) < 1e-3);
        CHECK(std::abs(e.last - 4.0) < 1e-3);
    }
    CHECK(threw);
}

TEST_CASE("disk integrals") {
    QuadratureConfig q;
    const double r = 0.8;
    const QuadValue a = integrate_disk_refined([](double rho, double) { return rho; }, r, q);
    CHECK(a.value == doctest::Approx(std::numbers::pi * r * r).epsilon(1e-12));

    const QuadValue b = integrate_disk_refined(
        [](double rho, double th) {
            const double c = std::cos(th);
            return rho * rho * rho * c * c;
        },
        r, q);
    CHECK(b.value ==
          doctest::Approx(std::numbers::pi * std::pow(r, 4.0) / 4.0).epsilon(1e-12));

    const QuadValue z = integrate_disk_refined([](double, double) { return 1.0; }, 0.0, q);
    CHECK(z.value == 0.0);
    CHECK_THROWS_AS(integrate_disk_refined([](double, double) { return 1.0; }, -1.0, q),
                    std::domain_error);
}
