#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace polyan {

using cpx = std::complex<double>;

// Truncated power series sum_{n=0}^{N} a_n z^n, evaluated on the closed unit disk.
// Coefficients are stored densely from degree 0; there is always at least one entry.
class AnalyticSeries {
public:
    AnalyticSeries();
    explicit AnalyticSeries(std::vector<cpx> coeffs);

    static AnalyticSeries zero(std::size_t degree = 0);
    static AnalyticSeries identity();                       // z
    static AnalyticSeries monomial(std::size_t n, cpx a = cpx{1.0, 0.0});
    static AnalyticSeries koebe(std::size_t degree);        // z/(1-z)^2 truncated
    // z/(1 - w z)^{2t} truncated; starlike for |w| <= 1, t in [0, 1]
    static AnalyticSeries koebe_like(cpx w, double t, std::size_t degree);

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<cpx>& coeffs() const { return c_; }
    cpx coeff(std::size_t n) const { return n < c_.size() ? c_[n] : cpx{}; }

private:
    std::vector<cpx> c_;
};

inline constexpr std::size_t kDefaultTruncation = 64;
inline constexpr std::size_t kDefaultMulCap = 256;

cpx eval(const AnalyticSeries& s, cpx z);
AnalyticSeries derivative(const AnalyticSeries& s);
AnalyticSeries antiderivative(const AnalyticSeries& s);   // constant term 0
AnalyticSeries add(const AnalyticSeries& s, const AnalyticSeries& t);
AnalyticSeries scale(const AnalyticSeries& s, cpx a);
AnalyticSeries mul(const AnalyticSeries& s, const AnalyticSeries& t,
                   std::size_t cap = kDefaultMulCap);
AnalyticSeries mul_by_z(const AnalyticSeries& s);
AnalyticSeries divide_by_z(const AnalyticSeries& s);      // requires a_0 = 0

// sum |a_n| r^n, r in [0, 1)
double majorant(const AnalyticSeries& s, double r);

bool is_zero(const AnalyticSeries& s);

}  // namespace polyan
