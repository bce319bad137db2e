#include "polyan/series.hpp"

#include <cmath>
#include <stdexcept>

namespace polyan {

namespace {
void validate(const std::vector<cpx>& c) {
    if (c.empty()) throw std::invalid_argument("series needs at least one coefficient");
    for (const cpx& a : c)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("series coefficient is not finite");
}
}  // namespace

AnalyticSeries::AnalyticSeries() : c_(1, cpx{}) {}

AnalyticSeries::AnalyticSeries(std::vector<cpx> coeffs) : c_(std::move(coeffs)) {
    validate(c_);
}

AnalyticSeries AnalyticSeries::zero(std::size_t degree) {
    return AnalyticSeries(std::vector<cpx>(degree + 1, cpx{}));
}

AnalyticSeries AnalyticSeries::identity() {
    return monomial(1);
}

AnalyticSeries AnalyticSeries::monomial(std::size_t n, cpx a) {
    std::vector<cpx> c(n + 1, cpx{});
    c[n] = a;
    return AnalyticSeries(std::move(c));
}

AnalyticSeries AnalyticSeries::koebe(std::size_t degree) {
    std::vector<cpx> c(degree + 1, cpx{});
    for (std::size_t n = 1; n <= degree; ++n) c[n] = cpx(double(n), 0.0);
    return AnalyticSeries(std::move(c));
}

AnalyticSeries AnalyticSeries::koebe_like(cpx w, double t, std::size_t degree) {
    if (t < 0.0 || t > 1.0) throw std::domain_error("koebe_like: t outside [0, 1]");
    if (std::abs(w) > 1.0 + 1e-12) throw std::domain_error("koebe_like: |w| > 1");
    // binomial series (1 - wz)^{-2t} = sum b_n z^n, b_{n+1} = b_n w (n + 2t)/(n + 1)
    std::vector<cpx> c(degree + 1, cpx{});
    cpx b{1.0, 0.0};
    for (std::size_t n = 1; n <= degree; ++n) {
        c[n] = b;
        b *= w * cpx((double(n - 1) + 2.0 * t) / double(n), 0.0);
    }
    return AnalyticSeries(std::move(c));
}

cpx eval(const AnalyticSeries& s, cpx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("eval: z is not finite");
    const auto& c = s.coeffs();
    cpx acc{};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

AnalyticSeries derivative(const AnalyticSeries& s) {
    const auto& c = s.coeffs();
    if (c.size() == 1) return AnalyticSeries::zero();
    std::vector<cpx> d(c.size() - 1);
    for (std::size_t n = 1; n < c.size(); ++n) d[n - 1] = double(n) * c[n];
    return AnalyticSeries(std::move(d));
}

AnalyticSeries antiderivative(const AnalyticSeries& s) {
    const auto& c = s.coeffs();
    std::vector<cpx> d(c.size() + 1, cpx{});
    for (std::size_t n = 0; n < c.size(); ++n) d[n + 1] = c[n] / double(n + 1);
    return AnalyticSeries(std::move(d));
}

AnalyticSeries add(const AnalyticSeries& s, const AnalyticSeries& t) {
    const auto& a = s.coeffs();
    const auto& b = t.coeffs();
    std::vector<cpx> c(std::max(a.size(), b.size()), cpx{});
    for (std::size_t n = 0; n < a.size(); ++n) c[n] += a[n];
    for (std::size_t n = 0; n < b.size(); ++n) c[n] += b[n];
    return AnalyticSeries(std::move(c));
}

AnalyticSeries scale(const AnalyticSeries& s, cpx a) {
    std::vector<cpx> c = s.coeffs();
    for (cpx& x : c) x *= a;
    return AnalyticSeries(std::move(c));
}

AnalyticSeries mul(const AnalyticSeries& s, const AnalyticSeries& t, std::size_t cap) {
    const auto& a = s.coeffs();
    const auto& b = t.coeffs();
    const std::size_t full = a.size() + b.size() - 2;
    const std::size_t deg = std::min(full, cap);
    std::vector<cpx> c(deg + 1, cpx{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > deg) break;
        for (std::size_t j = 0; j < b.size() && i + j <= deg; ++j) c[i + j] += a[i] * b[j];
    }
    return AnalyticSeries(std::move(c));
}

AnalyticSeries mul_by_z(const AnalyticSeries& s) {
    const auto& a = s.coeffs();
    std::vector<cpx> c(a.size() + 1, cpx{});
    for (std::size_t n = 0; n < a.size(); ++n) c[n + 1] = a[n];
    return AnalyticSeries(std::move(c));
}

AnalyticSeries divide_by_z(const AnalyticSeries& s) {
    const auto& a = s.coeffs();
    if (std::abs(a[0]) > 1e-14) throw std::domain_error("divide_by_z: constant term is nonzero");
    if (a.size() == 1) return AnalyticSeries::zero();
    return AnalyticSeries(std::vector<cpx>(a.begin() + 1, a.end()));
}

double majorant(const AnalyticSeries& s, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("majorant: r outside [0, 1)");
    const auto& c = s.coeffs();
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + std::abs(c[i]);
    return acc;
}

bool is_zero(const AnalyticSeries& s) {
    for (const cpx& a : s.coeffs())
        if (a != cpx{}) return false;
    return true;
}

}  // namespace polyan
