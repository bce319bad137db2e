#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "polyan/series.hpp"

namespace polyan::kernels {

// Parallel reductions are chunked into fixed blocks combined in index order,
// so results do not depend on the thread count.
inline constexpr std::size_t kBlock = 2048;

template <class F>
double sum_indexed_serial(std::size_t n, F f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += f(i);
    return acc;
}

template <class F>
double sum_indexed(std::size_t n, F f) {
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    if (nblocks <= 1) return sum_indexed_serial(n, f);
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < (long long)nblocks; ++b) {
        const std::size_t lo = std::size_t(b) * kBlock;
        const std::size_t hi = std::min(n, lo + kBlock);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        partial[std::size_t(b)] = acc;
    }
    double acc = 0.0;
    for (double p : partial) acc += p;
    return acc;
}

template <class F>
std::pair<double, std::size_t> argmin_indexed_serial(std::size_t n, F f) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = f(i);
        if (v < best) { best = v; at = i; }
    }
    return {best, at};
}

template <class F>
std::pair<double, std::size_t> argmin_indexed(std::size_t n, F f) {
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    if (nblocks <= 1) return argmin_indexed_serial(n, f);
    std::vector<double> bmin(nblocks);
    std::vector<std::size_t> bat(nblocks);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < (long long)nblocks; ++b) {
        const std::size_t lo = std::size_t(b) * kBlock;
        const std::size_t hi = std::min(n, lo + kBlock);
        double best = std::numeric_limits<double>::infinity();
        std::size_t at = lo;
        for (std::size_t i = lo; i < hi; ++i) {
            const double v = f(i);
            if (v < best) { best = v; at = i; }
        }
        bmin[std::size_t(b)] = best;
        bat[std::size_t(b)] = at;
    }
    double best = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t b = 0; b < nblocks; ++b)
        if (bmin[b] < best) { best = bmin[b]; at = bat[b]; }
    return {best, at};
}

template <class F>
double min_indexed_serial(std::size_t n, F f) {
    return argmin_indexed_serial(n, f).first;
}

template <class F>
double min_indexed(std::size_t n, F f) {
    return argmin_indexed(n, f).first;
}

// min over i < j of |vals_i - vals_j| / |pts_i - pts_j|
double min_pairwise_ratio_serial(const std::vector<cpx>& pts, const std::vector<cpx>& vals);
double min_pairwise_ratio(const std::vector<cpx>& pts, const std::vector<cpx>& vals);

// min over i < j of |pts_i - pts_j|
double min_pairwise_distance_serial(const std::vector<cpx>& pts);
double min_pairwise_distance(const std::vector<cpx>& pts);

// polar grid with nr radii (rmax (i+1)/nr) times ntheta angles (2 pi j / ntheta)
std::vector<cpx> polar_grid(double rmax, std::size_t nr, std::size_t ntheta);

}  // namespace polyan::kernels
