#include "polyan/bohr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyan/kernels.hpp"
#include "polyan/optim.hpp"
#include "polyan/roots.hpp"

namespace polyan {

const double kDistanceRadius = std::exp(-std::numbers::pi);

namespace {

double bohr_q(double r, int alpha) {
    double q = 3.0 * r - 1.0;
    double pj = r * r * r;
    for (int j = 3; j <= alpha; ++j) {
        q += pj;
        pj *= r;
        if (pj < 1e-300) break;
    }
    return q;
}

constexpr double kHypGridRadius = 1.0 - 1e-3;

// min over the polar grid of |A_0'| - |A_k'|, over all k >= 1
double orientation_margin(const PolyFunction& f, std::size_t grid) {
    if (f.order() == 1) return std::numeric_limits<double>::infinity();
    const auto pts = kernels::polar_grid(kHypGridRadius, grid, grid);
    std::vector<AnalyticSeries> dk;
    for (const AnalyticSeries& a : f.components()) dk.push_back(derivative(a));
    return kernels::min_indexed(pts.size(), [&](std::size_t i) {
        const cpx z = pts[i];
        const double base = std::abs(eval(dk[0], z));
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k < dk.size(); ++k)
            m = std::min(m, base - std::abs(eval(dk[k], z)));
        return m;
    });
}

double boundary_max_modulus(const PolyFunction& f, int samples) {
    const double h = 2.0 * std::numbers::pi / double(samples);
    return -kernels::min_indexed(std::size_t(samples), [&](std::size_t j) {
        return -std::abs(eval_poly(f, std::polar(1.0, h * double(j))));
    });
}

bool base_injective_sample(const AnalyticSeries& a) {
    const auto pts = kernels::polar_grid(kHypGridRadius, 24, 24);
    std::vector<cpx> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = eval(a, pts[i]);
    return kernels::min_pairwise_ratio(pts, vals) > 0.0;
}

bool non_constant(const AnalyticSeries& a) {
    for (std::size_t n = 1; n <= a.degree(); ++n)
        if (a.coeff(n) != cpx{}) return true;
    return false;
}

}  // namespace

RadiusResult bohr_radius(int alpha) {
    if (alpha < 2) throw std::domain_error("bohr_radius: alpha < 2");
    return bisect([&](double r) { return bohr_q(r, alpha); });
}

double bohr_bound(int alpha, double r) {
    if (alpha < 2) throw std::domain_error("bohr_bound: alpha < 2");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("bohr_bound: r outside [0, 1)");
    const double om = 1.0 - r;
    return r * (1.0 - std::pow(r, alpha)) / (om * om * om);
}

DistanceEstimate dist_to_boundary(const AnalyticSeries& a, int samples) {
    if (samples < 256) throw std::domain_error("dist_to_boundary: samples < 256");
    const cpx a0 = eval(a, cpx{});
    const double h = 2.0 * std::numbers::pi / double(samples);
    std::vector<cpx> img(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
    for (long long j = 0; j < samples; ++j)
        img[std::size_t(j)] = eval(a, std::polar(1.0, h * double(j)));

    const auto [coarse, at] =
        kernels::argmin_indexed(img.size(), [&](std::size_t j) { return std::abs(img[j] - a0); });
    const auto fdist = [&](double th) { return std::abs(eval(a, std::polar(1.0, th)) - a0); };
    const double th0 = h * double(at);
    const double thstar = golden_min(fdist, th0 - h, th0 + h);
    DistanceEstimate est;
    est.distance = std::min(coarse, fdist(thstar));

    // distant parameter pairs landing on (nearly) the same image point mean the
    // boundary curve self-intersects and the distance can overshoot
    double scale = 0.0;
    for (const cpx& w : img) scale = std::max(scale, std::abs(w - a0));
    const std::size_t gap = img.size() / 16;
    const double sep = kernels::min_indexed(img.size(), [&](std::size_t i) {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + gap; j < img.size() && j + gap <= i + img.size(); ++j)
            m = std::min(m, std::abs(img[i] - img[j]));
        return m;
    });
    est.injective_boundary = !(sep <= 1e-6 * scale);
    return est;
}

BoundReport check_bohr(const PolyFunction& f, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("check_bohr: r outside [0, 1)");
    const AnalyticSeries& base = f.component(0);

    BoundReport rep;
    rep.lhs = majorant_poly(f, r);
    rep.rhs = 1.0;
    rep.margin = 1.0 - rep.lhs;

    const double omarg = orientation_margin(f, 64);
    rep.flags.orientation_preserving = omarg > 0.0;
    rep.details["orientation_margin"] = std::isfinite(omarg) ? omarg : 1.0;

    const double bmax = boundary_max_modulus(f, 1024);
    rep.flags.image_in_disk = bmax <= 1.0 + 1e-9;
    rep.details["boundary_max"] = bmax;

    const double d1 = std::abs(eval(derivative(base), cpx{}));
    rep.flags.univalent_base = std::abs(eval(base, cpx{})) <= 1e-14 && d1 > 0.0 &&
                               d1 <= 1.0 + 1e-12 && base_injective_sample(base);
    rep.flags.omits_two_points = non_constant(base);

    rep.pass = rep.margin > 0.0 && rep.flags.all();
    return rep;
}

BoundReport check_distance_bound(const PolyFunction& f, double r) {
    if (!(r >= 0.0 && r <= kDistanceRadius + 1e-15))
        throw std::domain_error("check_distance_bound: r outside [0, e^-pi]");
    const AnalyticSeries& base = f.component(0);

    BoundReport rep;
    const DistanceEstimate est = dist_to_boundary(base, 4096);
    const double geo = (1.0 - std::pow(r, f.order())) / (1.0 - r);
    rep.lhs = majorant_poly(f, r);
    rep.rhs = geo * est.distance;
    rep.margin = rep.rhs - rep.lhs;
    rep.details["distance"] = est.distance;

    bool centered = true;
    for (std::size_t k = 1; k < f.order(); ++k)
        if (std::abs(eval(f.component(k), cpx{})) > 1e-14) centered = false;
    rep.details["centered_components"] = centered ? 1.0 : 0.0;

    const double omarg = orientation_margin(f, 64);
    rep.flags.orientation_preserving = omarg > 0.0;
    rep.flags.univalent_base = est.injective_boundary;
    rep.flags.omits_two_points = non_constant(base);

    rep.pass = centered && rep.margin >= -1e-12 && rep.flags.all();
    return rep;
}

}  // namespace polyan
