#include "polyan/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyan/kernels.hpp"
#include "polyan/optim.hpp"

namespace polyan {

namespace {
constexpr double kGridRadius = 1.0 - 1e-3;
}

double max_modulus(const AnalyticSeries& a, double r, int samples) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("max_modulus: r outside [0, 1]");
    if (samples < 16) throw std::domain_error("max_modulus: samples < 16");
    const double h = 2.0 * std::numbers::pi / double(samples);
    const auto neg = [&](double th) { return -std::abs(eval(a, std::polar(r, th))); };
    const auto [coarse, at] = kernels::argmin_indexed(
        std::size_t(samples), [&](std::size_t j) { return neg(h * double(j)); });
    const double thstar = golden_min(neg, h * double(at) - h, h * double(at) + h);
    return std::max(-coarse, -neg(thstar));
}

bool is_starlike(const AnalyticSeries& a, int grid, double rmax) {
    if (grid < 8) throw std::domain_error("is_starlike: grid < 8");
    if (!(rmax > 0.0 && rmax < 1.0)) throw std::domain_error("is_starlike: rmax outside (0, 1)");
    if (std::abs(a.coeff(0)) > 1e-14) throw std::domain_error("is_starlike: A(0) != 0");
    if (is_zero(a)) throw std::domain_error("is_starlike: zero series");
    const AnalyticSeries da = derivative(a);
    const auto pts = kernels::polar_grid(rmax, std::size_t(grid), std::size_t(grid));
    const double worst = kernels::min_indexed(pts.size(), [&](std::size_t i) {
        const cpx z = pts[i];
        const cpx az = eval(a, z);
        if (std::abs(az) < 1e-280) return -1.0;
        return (z * eval(da, z) / az).real();
    });
    return worst > 0.0;
}

QuadValue arclength(const PolyFunction& f, double r, const QuadratureConfig& q) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("arclength: r outside (0, 1)");
    const PolyFunction fz = d_z(f);
    const PolyFunction fzb = d_zbar(f);
    return integrate_circle_refined(
        [&](double th) {
            const cpx z = std::polar(r, th);
            return std::abs(z * eval_poly(fz, z) - std::conj(z) * eval_poly(fzb, z));
        },
        q);
}

double arclength_bound(int alpha, double M, double r) {
    if (alpha < 2) throw std::domain_error("arclength_bound: alpha < 2");
    if (M < 0.0) throw std::domain_error("arclength_bound: M < 0");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("arclength_bound: r outside [0, 1)");
    if (r == 0.0) return 0.0;
    const double om = 1.0 - r;
    const double ra1 = std::pow(r, alpha - 1);
    const double bracket =
        (1.0 + r) * (double(alpha - 1) * ra1 * r - double(alpha) * ra1 + 1.0) / (om * om) - 1.0 +
        ra1;
    return 2.0 * std::numbers::pi * M * r / om * bracket;
}

QuadValue moment_p(const PolyFunction& f, double r, double p, const QuadratureConfig& q) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("moment_p: r outside (0, 1)");
    if (p < 0.0) throw std::domain_error("moment_p: p < 0");
    const PolyFunction fz = d_z(f);
    const PolyFunction fzb = d_zbar(f);
    return integrate_disk_refined(
        [&](double rho, double th) {
            const cpx z = std::polar(rho, th);
            const double jac = std::norm(eval_poly(fz, z)) - std::norm(eval_poly(fzb, z));
            const double amp = p == 0.0 ? 1.0 : std::pow(std::abs(eval_poly(f, z)), p);
            return amp * jac * rho;
        },
        r, q);
}

double moment_lower_bound(double p, double r) {
    if (p < 0.0) throw std::domain_error("moment_lower_bound: p < 0");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("moment_lower_bound: r outside [0, 1)");
    return 2.0 * std::numbers::pi * std::pow(r, 3.0 * p + 6.0) / (3.0 * p + 6.0);
}

BoundReport min_area_check(const PolyFunction& f, double r, const QuadratureConfig& q) {
    if (f.order() != 2) throw std::domain_error("min_area_check: order != 2");
    const AnalyticSeries& b = f.component(0);
    const AnalyticSeries& a = f.component(1);

    BoundReport rep;
    rep.lhs = moment_p(f, r, 0.0, q).value;
    rep.rhs = std::numbers::pi * std::pow(r, 6.0) / 3.0;
    rep.margin = rep.lhs - rep.rhs;

    if (std::abs(a.coeff(0)) <= 1e-14 && !is_zero(a)) {
        const AnalyticSeries phi = divide_by_z(a);
        bool star = false;
        if (std::abs(phi.coeff(0)) <= 1e-14 && !is_zero(phi)) star = is_starlike(phi, 48);
        bool inj = false;
        if (star) {
            const auto pts = kernels::polar_grid(kGridRadius, 24, 24);
            std::vector<cpx> vals(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = eval(phi, pts[i]);
            inj = kernels::min_pairwise_ratio(pts, vals) > 0.0;
        }
        rep.flags.univalent_base = star && inj;
    } else {
        rep.flags.univalent_base = false;
    }

    const AnalyticSeries da = derivative(a);
    const AnalyticSeries db = derivative(b);
    const auto pts = kernels::polar_grid(kGridRadius, 48, 48);
    const double coupling = kernels::min_indexed(pts.size(), [&](std::size_t i) {
        const cpx z = pts[i];
        return (std::conj(z) * eval(da, z) * std::conj(eval(db, z))).real();
    });
    rep.flags.orientation_preserving = coupling >= -1e-12;
    rep.details["coupling_min"] = coupling;

    rep.pass = rep.margin >= -1e-9 && rep.flags.all();
    return rep;
}

BoundReport linkage_check(const AnalyticSeries& a, int grid) {
    if (grid < 8) throw std::domain_error("linkage_check: grid < 8");

    const bool star = is_starlike(a, grid);

    // Phi = z F for F = conj(z) A, an order-2 function with components (0, zA)
    const PolyFunction phi({AnalyticSeries::zero(), mul_by_z(a)});
    const PolyFunction pz = d_z(phi);
    const PolyFunction pzb = d_zbar(phi);
    const AnalyticSeries da = derivative(a);

    const auto pts = kernels::polar_grid(kGridRadius, std::size_t(grid), std::size_t(grid));
    std::vector<double> jmin(pts.size()), remin(pts.size()), iderr(pts.size());
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < (long long)pts.size(); ++ii) {
        const std::size_t i = std::size_t(ii);
        const cpx z = pts[i];
        const cpx phz = eval_poly(phi, z);
        const cpx num = z * eval_poly(pz, z) - std::conj(z) * eval_poly(pzb, z);
        jmin[i] = std::norm(eval_poly(pz, z)) - std::norm(eval_poly(pzb, z));
        const cpx az = eval(a, z);
        if (std::abs(phz) < 1e-280 || std::abs(az) < 1e-280) {
            remin[i] = -1.0;
            iderr[i] = 0.0;
            continue;
        }
        const cpx ratio = num / phz;
        const cpx direct = z * eval(da, z) / az;
        remin[i] = ratio.real();
        iderr[i] = std::abs(ratio - direct) / std::max(1.0, std::abs(direct));
    }
    const double jworst = kernels::min_indexed(pts.size(), [&](std::size_t i) { return jmin[i]; });
    const double reworst =
        kernels::min_indexed(pts.size(), [&](std::size_t i) { return remin[i]; });
    const double maxerr =
        -kernels::min_indexed(pts.size(), [&](std::size_t i) { return -iderr[i]; });

    const bool jac_pos = jworst > 0.0;
    const bool ratio_pos = reworst > 0.0;

    BoundReport rep;
    rep.lhs = maxerr;
    rep.rhs = 1e-10;
    rep.margin = rep.rhs - rep.lhs;
    rep.details["starlike"] = star ? 1.0 : 0.0;
    rep.details["jacobian_positive"] = jac_pos ? 1.0 : 0.0;
    rep.details["ratio_positive"] = ratio_pos ? 1.0 : 0.0;
    rep.details["identity_max_err"] = maxerr;
    rep.pass = (star == (jac_pos && ratio_pos)) && maxerr <= 1e-10;
    return rep;
}

}  // namespace polyan
