#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyan/bohr.hpp"
#include "polyan/polyfun.hpp"
#include "polyan/rng.hpp"
#include "polyan/series.hpp"

using namespace polyan;

namespace {

double q_of(double r, int alpha) {
    double s = 3.0 * r - 1.0;
    double p = r * r;
    for (int j = 3; j <= alpha; ++j) {
        p *= r;
        s += p;
    }
    return s;
}

}  // namespace

TEST_CASE("bohr_radius frozen values") {
    CHECK(std::abs(bohr_radius(2).radius - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(bohr_radius(3).radius - 0.3221853546) < 1e-9);
    CHECK(std::abs(bohr_radius(4).radius - 0.3190532543) < 1e-9);
    CHECK(std::abs(bohr_radius(5).radius - 0.3181046747) < 1e-9);
    CHECK(std::abs(bohr_radius(50).radius - 0.3176721962) < 1e-9);
    CHECK(std::abs(bohr_radius(100).radius - 0.3176721962) < 1e-9);
    CHECK(std::abs(bohr_radius(50).radius - bohr_radius(100).radius) < 1e-12);
}

TEST_CASE("bound minus one factors through Q") {
    Rng rng(4242);
    for (int alpha : {2, 3, 7}) {
        for (int t = 0; t < 20; ++t) {
            const double r = rng.uniform(0.05, 0.6);
            const double lhs = (bohr_bound(alpha, r) - 1.0) * (1.0 - r) * (1.0 - r);
            CHECK(std::abs(lhs - q_of(r, alpha)) < 1e-12);
        }
        const double root = bohr_radius(alpha).radius;
        CHECK(std::abs(bohr_bound(alpha, root) - 1.0) < 1e-9);
    }
}

TEST_CASE("bohr domain guards") {
    CHECK_THROWS_AS(bohr_radius(1), std::domain_error);
    CHECK_THROWS_AS(bohr_bound(2, -0.1), std::domain_error);
    CHECK_THROWS_AS(bohr_bound(2, 1.0), std::domain_error);
    CHECK_THROWS_AS(bohr_bound(1, 0.2), std::domain_error);
}

TEST_CASE("check_bohr on small explicit functions") {
    const AnalyticSeries id = AnalyticSeries::identity();
    const AnalyticSeries z2 = AnalyticSeries::monomial(2, 1.0);

    const BoundReport ok = check_bohr(PolyFunction({id, AnalyticSeries::zero()}), 1.0 / 3.0);
    CHECK(ok.pass);
    CHECK(ok.flags.all());
    CHECK(ok.lhs < 1.0);

    // |d/dz z^2| exceeds |d/dz z| near the rim, so orientation fails
    const BoundReport bad = check_bohr(PolyFunction({id, z2}), 0.33);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.flags.orientation_preserving);

    AnalyticSeries half = AnalyticSeries::monomial(2, -0.5);
    const BoundReport wit = check_bohr(PolyFunction({id, half}), 0.33);
    CHECK(wit.pass);
    CHECK(wit.flags.all());
}

TEST_CASE("distance radius constant") {
    CHECK(kDistanceRadius == 0.04321391826377226);
    CHECK(std::abs(kDistanceRadius - std::exp(-std::numbers::pi)) < 1e-16);
}

TEST_CASE("dist_to_boundary of z/2 + z^2/4") {
    AnalyticSeries a({{0.0, 0.0}, {0.5, 0.0}, {0.25, 0.0}});
    const DistanceEstimate d = dist_to_boundary(a, 1024);
    // the minimum is at theta = pi: |-1/2 + 1/4| = 1/4
    CHECK(std::abs(d.distance - 0.25) < 1e-9);
    CHECK(d.injective_boundary);
    CHECK_THROWS_AS(dist_to_boundary(a, 128), std::domain_error);
}

TEST_CASE("check_distance_bound behavior") {
    const AnalyticSeries id = AnalyticSeries::identity();

    const BoundReport ok = check_distance_bound(PolyFunction({id, AnalyticSeries::zero()}),
                                                kDistanceRadius);
    CHECK(ok.pass);

    // A_0 = 5 + z has boundary distance 1 but the majorant includes |5|,
    // so the claim honestly fails for a non-vanishing base
    AnalyticSeries shifted({{5.0, 0.0}, {1.0, 0.0}});
    const BoundReport bad = check_distance_bound(PolyFunction({shifted}), kDistanceRadius);
    CHECK_FALSE(bad.pass);
    CHECK(bad.margin < 0.0);

    const AnalyticSeries half_const = AnalyticSeries::monomial(0, cpx{0.5, 0.0});
    const BoundReport unc =
        check_distance_bound(PolyFunction({id, half_const}), kDistanceRadius);
    CHECK_FALSE(unc.pass);
    CHECK(unc.details.at("centered_components") == 0.0);

    CHECK_THROWS_AS(check_distance_bound(PolyFunction({id}), 0.05), std::domain_error);
}
