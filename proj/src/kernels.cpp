#include "polyan/kernels.hpp"

#include <cmath>
#include <numbers>

namespace polyan::kernels {

namespace {

template <class RowCost>
double min_over_rows(std::size_t n, RowCost row) {
    if (n < 2) return std::numeric_limits<double>::infinity();
    std::vector<double> rowmin(n, std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < (long long)n; ++i) rowmin[std::size_t(i)] = row(std::size_t(i));
    double best = std::numeric_limits<double>::infinity();
    for (double v : rowmin) best = std::min(best, v);
    return best;
}

}  // namespace

double min_pairwise_ratio_serial(const std::vector<cpx>& pts, const std::vector<cpx>& vals) {
    const std::size_t n = pts.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dz = std::abs(pts[i] - pts[j]);
            if (dz < 1e-300) continue;
            best = std::min(best, std::abs(vals[i] - vals[j]) / dz);
        }
    return best;
}

double min_pairwise_ratio(const std::vector<cpx>& pts, const std::vector<cpx>& vals) {
    const std::size_t n = pts.size();
    return min_over_rows(n, [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dz = std::abs(pts[i] - pts[j]);
            if (dz < 1e-300) continue;
            best = std::min(best, std::abs(vals[i] - vals[j]) / dz);
        }
        return best;
    });
}

double min_pairwise_distance_serial(const std::vector<cpx>& pts) {
    const std::size_t n = pts.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            best = std::min(best, std::abs(pts[i] - pts[j]));
    return best;
}

double min_pairwise_distance(const std::vector<cpx>& pts) {
    const std::size_t n = pts.size();
    return min_over_rows(n, [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < n; ++j)
            best = std::min(best, std::abs(pts[i] - pts[j]));
        return best;
    });
}

std::vector<cpx> polar_grid(double rmax, std::size_t nr, std::size_t ntheta) {
    std::vector<cpx> pts;
    pts.reserve(nr * ntheta);
    for (std::size_t i = 0; i < nr; ++i) {
        const double r = rmax * double(i + 1) / double(nr);
        for (std::size_t j = 0; j < ntheta; ++j) {
            const double th = 2.0 * std::numbers::pi * double(j) / double(ntheta);
            pts.push_back(std::polar(r, th));
        }
    }
    return pts;
}

}  // namespace polyan::kernels
