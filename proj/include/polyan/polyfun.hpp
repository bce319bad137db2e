#pragma once

#include <vector>

#include "polyan/series.hpp"

namespace polyan {

// Poly-analytic function of order alpha:
//   F(z) = sum_{k=0}^{alpha-1} conj(z)^k A_k(z)
// with each component A_k analytic on the disk.
class PolyFunction {
public:
    explicit PolyFunction(std::vector<AnalyticSeries> components);

    std::size_t order() const { return comp_.size(); }
    const AnalyticSeries& component(std::size_t k) const { return comp_.at(k); }
    const std::vector<AnalyticSeries>& components() const { return comp_; }

private:
    std::vector<AnalyticSeries> comp_;
};

cpx eval_poly(const PolyFunction& f, cpx z);

// Wirtinger derivatives. d_z keeps the order; d_zbar lowers it by one
// (order 1 collapses to the zero function of order 1).
PolyFunction d_z(const PolyFunction& f);
PolyFunction d_zbar(const PolyFunction& f);

// |F_z|^2 - |F_zbar|^2 at z
double jacobian(const PolyFunction& f, cpx z);

// sum_k r^k majorant(A_k, r), r in [0, 1)
double majorant_poly(const PolyFunction& f, double r);

}  // namespace polyan
