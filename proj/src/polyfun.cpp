#include "polyan/polyfun.hpp"

#include <stdexcept>

namespace polyan {

PolyFunction::PolyFunction(std::vector<AnalyticSeries> components)
    : comp_(std::move(components)) {
    if (comp_.empty()) throw std::invalid_argument("polyfunction needs at least one component");
}

cpx eval_poly(const PolyFunction& f, cpx z) {
    const cpx zb = std::conj(z);
    cpx acc{};
    for (std::size_t k = f.order(); k-- > 0;) acc = acc * zb + eval(f.component(k), z);
    return acc;
}

PolyFunction d_z(const PolyFunction& f) {
    std::vector<AnalyticSeries> comp;
    comp.reserve(f.order());
    for (const AnalyticSeries& a : f.components()) comp.push_back(derivative(a));
    return PolyFunction(std::move(comp));
}

PolyFunction d_zbar(const PolyFunction& f) {
    if (f.order() == 1) return PolyFunction({AnalyticSeries::zero()});
    std::vector<AnalyticSeries> comp;
    comp.reserve(f.order() - 1);
    for (std::size_t k = 1; k < f.order(); ++k)
        comp.push_back(scale(f.component(k), cpx(double(k), 0.0)));
    return PolyFunction(std::move(comp));
}

double jacobian(const PolyFunction& f, cpx z) {
    const cpx fz = eval_poly(d_z(f), z);
    const cpx fzb = eval_poly(d_zbar(f), z);
    return std::norm(fz) - std::norm(fzb);
}

double majorant_poly(const PolyFunction& f, double r) {
    double acc = 0.0;
    for (std::size_t k = f.order(); k-- > 0;) acc = acc * r + majorant(f.component(k), r);
    return acc;
}

}  // namespace polyan
