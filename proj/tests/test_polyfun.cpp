#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "polyan/polyfun.hpp"

using namespace polyan;

namespace {
PolyFunction zbar_z2() {
    return PolyFunction({AnalyticSeries::zero(), AnalyticSeries::monomial(2)});
}
}  // namespace

TEST_CASE("construction") {
    CHECK_THROWS_AS(PolyFunction(std::vector<AnalyticSeries>{}), std::invalid_argument);
    CHECK(zbar_z2().order() == 2);
}

TEST_CASE("eval_poly matches direct expression") {
    const PolyFunction f = zbar_z2();  // conj(z) z^2
    const cpx z{0.3, 0.4};
    CHECK(std::abs(eval_poly(f, z) - std::conj(z) * z * z) < 1e-15);

    const PolyFunction g({AnalyticSeries::identity(), AnalyticSeries::monomial(0, cpx{0.5, 0.0}),
                          AnalyticSeries::monomial(1, cpx{0.0, 1.0})});
    const cpx zb = std::conj(z);
    const cpx want = z + zb * 0.5 + zb * zb * cpx{0.0, 1.0} * z;
    CHECK(std::abs(eval_poly(g, z) - want) < 1e-15);
}

TEST_CASE("wirtinger pair") {
    const PolyFunction f({AnalyticSeries({cpx{}, cpx{1.0, 0.0}, cpx{0.5, 0.0}}),
                          AnalyticSeries({cpx{}, cpx{0.0, 2.0}}),
                          AnalyticSeries({cpx{1.0, 1.0}})});
    const PolyFunction fz = d_z(f);
    CHECK(fz.order() == 3);
    CHECK(fz.component(0).coeff(0) == cpx{1.0, 0.0});
    CHECK(fz.component(0).coeff(1) == cpx{1.0, 0.0});
    CHECK(fz.component(1).coeff(0) == cpx{0.0, 2.0});
    CHECK(is_zero(fz.component(2)));

    const PolyFunction fzb = d_zbar(f);
    CHECK(fzb.order() == 2);
    CHECK(fzb.component(0).coeff(1) == cpx{0.0, 2.0});   // 1 * A_1
    CHECK(fzb.component(1).coeff(0) == cpx{2.0, 2.0});   // 2 * A_2

    const PolyFunction analytic({AnalyticSeries::koebe(8)});
    const PolyFunction dz0 = d_zbar(analytic);
    CHECK(dz0.order() == 1);
    CHECK(is_zero(dz0.component(0)));
}

TEST_CASE("jacobian of conj(z) z^2 is 3 rho^4") {
    const PolyFunction f = zbar_z2();
    for (const cpx z : {cpx{0.3, 0.1}, cpx{-0.5, 0.45}, cpx{0.0, 0.7}}) {
        const double rho = std::abs(z);
        CHECK(jacobian(f, z) ==
              doctest::Approx(3.0 * std::pow(rho, 4.0)).epsilon(1e-12));
    }
    // analytic case: J = |f'|^2
    const PolyFunction a({AnalyticSeries::koebe(16)});
    const cpx z{0.2, -0.3};
    const double dv = std::abs(eval(derivative(AnalyticSeries::koebe(16)), z));
    CHECK(jacobian(a, z) == doctest::Approx(dv * dv).epsilon(1e-13));
}

TEST_CASE("majorant_poly") {
    const PolyFunction f({AnalyticSeries::identity(), AnalyticSeries::monomial(2)});
    for (const double r : {0.25, 0.5, 0.9})
        CHECK(majorant_poly(f, r) == doctest::Approx(r + r * r * r).epsilon(1e-14));
}
