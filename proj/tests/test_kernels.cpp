#include <doctest.h>

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polyan/kernels.hpp"
#include "polyan/rng.hpp"

using namespace polyan;

TEST_CASE("sum_indexed agrees with serial and is thread-count invariant") {
    const std::size_t n = 100000;
    const auto f = [](std::size_t i) { return std::sin(double(i)) / double(i + 1); };
    const double a = kernels::sum_indexed_serial(n, f);
    const double b = kernels::sum_indexed(n, f);
    CHECK(std::abs(a - b) <= 1e-13 * std::abs(a));

#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double b1 = kernels::sum_indexed(n, f);
    omp_set_num_threads(saved);
    CHECK(b1 == b);
#endif
}

TEST_CASE("argmin and min") {
    const std::size_t n = 50000;
    const auto f = [](std::size_t i) { return (double(i) - 37311.0) * (double(i) - 37311.0); };
    const auto [vs, is] = kernels::argmin_indexed_serial(n, f);
    const auto [vp, ip] = kernels::argmin_indexed(n, f);
    CHECK(vs == vp);
    CHECK(is == ip);
    CHECK(ip == 37311);
    CHECK(kernels::min_indexed(n, f) == vs);

    // ties resolve to the first index in both variants
    const auto tie = [](std::size_t i) { return double(i % 1000 == 7 ? 0 : 1); };
    CHECK(kernels::argmin_indexed_serial(n, tie).second ==
          kernels::argmin_indexed(n, tie).second);
}

TEST_CASE("pairwise kernels agree exactly") {
    Rng rng(42);
    std::vector<cpx> pts, vals;
    for (int i = 0; i < 700; ++i) {
        pts.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        vals.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    CHECK(kernels::min_pairwise_ratio_serial(pts, vals) ==
          kernels::min_pairwise_ratio(pts, vals));
    CHECK(kernels::min_pairwise_distance_serial(pts) == kernels::min_pairwise_distance(pts));

    // coincident points are skipped, not divided by
    pts.push_back(pts[0]);
    vals.emplace_back(5.0, 5.0);
    const double r = kernels::min_pairwise_ratio(pts, vals);
    CHECK(std::isfinite(r));

#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double r1 = kernels::min_pairwise_ratio(pts, vals);
    omp_set_num_threads(saved);
    CHECK(r1 == r);
#endif
}

TEST_CASE("polar_grid layout") {
    const auto pts = kernels::polar_grid(0.8, 4, 8);
    CHECK(pts.size() == 32);
    CHECK(std::abs(pts[0] - cpx{0.2, 0.0}) < 1e-15);          // first radius, angle 0
    CHECK(std::abs(std::abs(pts[31]) - 0.8) < 1e-15);          // last ring at rmax
    CHECK(std::abs(pts[8] - cpx{0.4, 0.0}) < 1e-15);
}
