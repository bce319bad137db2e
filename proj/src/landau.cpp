#include "polyan/landau.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyan/kernels.hpp"
#include "polyan/optim.hpp"
#include "polyan/roots.hpp"

namespace polyan {

namespace {

double landau_g(double rho, double M, int alpha) {
    double bracket = rho * (2.0 - rho);
    double pk = 1.0;
    for (int k = 1; k < alpha; ++k) {
        pk *= rho;
        bracket += pk * (1.0 + double(k) - rho);
    }
    const double om = 1.0 - rho;
    return 1.0 - M * bracket / (om * om);
}

}  // namespace

RadiusResult landau_rho(double M, int alpha) {
    if (M < 1.0) throw std::domain_error("landau_rho: M < 1");
    if (alpha < 2) throw std::domain_error("landau_rho: alpha < 2");
    return bisect([&](double rho) { return landau_g(rho, M, alpha); });
}

double landau_R(double rho1, double M, int alpha) {
    if (!(rho1 > 0.0 && rho1 < 1.0)) throw std::domain_error("landau_R: rho1 outside (0, 1)");
    if (M < 1.0) throw std::domain_error("landau_R: M < 1");
    if (alpha < 2) throw std::domain_error("landau_R: alpha < 2");
    const double om = 1.0 - rho1;
    double tail = 0.0;  // sum_{k=0}^{alpha-1} rho1^{k+2}
    double pk = rho1 * rho1;
    for (int k = 0; k < alpha; ++k) {
        tail += pk;
        pk *= rho1;
    }
    const double geo = (1.0 - std::pow(rho1, alpha - 1)) / om;
    return rho1 - rho1 * rho1 * geo - M * tail / om;
}

RadiusResult bianalytic_rho(double M) {
    if (M < 1.0) throw std::domain_error("bianalytic_rho: M < 1");
    const double rho = 1.0 - std::sqrt(2.0 * M / (2.0 * M + 1.0));
    return {rho, landau_g(rho, M, 2), 0, rho, rho};
}

BoundReport check_injectivity(const PolyFunction& f, double rho, int grid) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("check_injectivity: rho outside (0, 1)");
    if (grid < 8) throw std::domain_error("check_injectivity: grid < 8");
    const auto pts = kernels::polar_grid(rho * (1.0 - 1e-12), std::size_t(grid), std::size_t(grid));
    std::vector<cpx> vals(pts.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)pts.size(); ++i)
        vals[std::size_t(i)] = eval_poly(f, pts[std::size_t(i)]);
    const double ratio = kernels::min_pairwise_ratio(pts, vals);

    BoundReport rep;
    rep.lhs = 0.0;
    rep.rhs = ratio;
    rep.margin = ratio;
    rep.pass = ratio > 0.0;
    rep.details["min_ratio"] = ratio;
    rep.details["grid"] = double(grid);
    rep.details["rho"] = rho;
    return rep;
}

BoundReport check_covering(const PolyFunction& f, double rho, double R, int samples) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("check_covering: rho outside (0, 1)");
    if (samples < 64) throw std::domain_error("check_covering: samples < 64");
    const double h = 2.0 * std::numbers::pi / double(samples);
    const auto [coarse, at] = kernels::argmin_indexed(
        std::size_t(samples),
        [&](std::size_t j) { return std::abs(eval_poly(f, std::polar(rho, h * double(j)))); });
    const auto mod = [&](double th) { return std::abs(eval_poly(f, std::polar(rho, th))); };
    const double th0 = h * double(at);
    const double thstar = golden_min(mod, th0 - h, th0 + h);
    const double mn = std::min(coarse, mod(thstar));

    BoundReport rep;
    rep.lhs = R;
    rep.rhs = mn;
    rep.margin = mn - R;
    rep.pass = rep.margin >= -1e-9;
    rep.details["min_modulus"] = mn;
    rep.details["angle"] = thstar;
    rep.details["rho"] = rho;
    if (R <= 0.0) rep.details["non_informative"] = 1.0;
    return rep;
}

}  // namespace polyan
