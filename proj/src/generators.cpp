#include "polyan/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyan/geometry.hpp"
#include "polyan/rng.hpp"

namespace polyan {

namespace {

double l1norm(const AnalyticSeries& s) {
    double acc = 0.0;
    for (const cpx& a : s.coeffs()) acc += std::abs(a);
    return acc;
}

// z + sum_{n=2}^{deg} a_n z^n with random phases, magnitudes decaying like d^n,
// rescaled so that sum_{n>=2} |a_n| = tail
AnalyticSeries normalized_body(Rng& rng, std::size_t deg, double decay, double tail) {
    std::vector<cpx> c(deg + 1, cpx{});
    c[1] = cpx{1.0, 0.0};
    double sum = 0.0;
    std::vector<double> mag(deg + 1, 0.0);
    for (std::size_t n = 2; n <= deg; ++n) {
        mag[n] = rng.uniform(0.1, 1.0) * std::pow(decay, double(n));
        sum += mag[n];
    }
    if (sum > 0.0) {
        const double s = tail / sum;
        for (std::size_t n = 2; n <= deg; ++n) c[n] = mag[n] * s * rng.unit_phase();
    }
    return AnalyticSeries(std::move(c));
}

AnalyticSeries starlike_factor(Rng& rng, std::size_t deg) {
    // draws made one per statement so the consumption order is fixed
    const double wm = rng.uniform(0.2, 0.7);
    const cpx w = wm * rng.unit_phase();
    const double t = rng.uniform(0.25, 1.0);
    return AnalyticSeries::koebe_like(w, t, deg);
}

}  // namespace

PolyFunction gen_landau(const GeneratorSpec& spec) {
    if (spec.M < 1.0) throw std::domain_error("gen_landau: M < 1");
    if (spec.alpha < 2) throw std::domain_error("gen_landau: alpha < 2");
    Rng rng(mix64(spec.seed));
    const std::size_t deg = std::min<std::size_t>(spec.truncation, 24);
    std::vector<AnalyticSeries> comp;
    comp.reserve(std::size_t(spec.alpha));
    for (int k = 0; k < spec.alpha; ++k) {
        if (spec.M == 1.0) {
            comp.push_back(AnalyticSeries::identity());
            continue;
        }
        const double tail = rng.uniform(0.3, 0.95) * (spec.M - 1.0);
        comp.push_back(normalized_body(rng, deg, rng.uniform(0.3, 0.8), tail));
    }
    return PolyFunction(std::move(comp));
}

PolyFunction gen_bohr(const GeneratorSpec& spec) {
    if (spec.alpha < 1) throw std::domain_error("gen_bohr: alpha < 1");
    Rng rng(mix64(spec.seed));

    // base: t (z + sum eps_n z^n) with sum n |eps_n| <= 0.9, univalent on the disk
    const double t = rng.uniform(0.5, 1.0);
    const double v = rng.uniform(0.3, 1.0);
    std::vector<cpx> c0(13, cpx{});
    c0[1] = cpx{1.0, 0.0};
    {
        std::vector<double> raw(13, 0.0);
        double wsum = 0.0;
        for (std::size_t n = 2; n < c0.size(); ++n) {
            raw[n] = rng.uniform(0.1, 1.0) * std::pow(0.6, double(n));
            wsum += double(n) * raw[n];
        }
        const double s = 0.9 * v / wsum;
        for (std::size_t n = 2; n < c0.size(); ++n) c0[n] = raw[n] * s * rng.unit_phase();
    }
    AnalyticSeries base = scale(AnalyticSeries(std::move(c0)), cpx{t, 0.0});
    const AnalyticSeries dbase = derivative(base);

    std::vector<AnalyticSeries> comp{base};
    for (int k = 1; k < spec.alpha; ++k) {
        // a_k with coefficient l1 norm beta < 1, so |A_k'| = |a_k||A_0'| < |A_0'|
        const double beta = rng.uniform(0.2, 0.9);
        std::vector<cpx> ak(9, cpx{});
        double asum = 0.0;
        std::vector<double> mag(9, 0.0);
        for (std::size_t n = 0; n < ak.size(); ++n) {
            mag[n] = rng.uniform(0.1, 1.0) * std::pow(0.7, double(n));
            asum += mag[n];
        }
        for (std::size_t n = 0; n < ak.size(); ++n)
            ak[n] = mag[n] * (beta / asum) * rng.unit_phase();
        comp.push_back(
            antiderivative(mul(AnalyticSeries(std::move(ak)), dbase, spec.truncation)));
    }

    double s1 = 0.0;
    for (const AnalyticSeries& a : comp) s1 += l1norm(a);
    const cpx shrink{rng.uniform(0.5, 0.95) / s1, 0.0};
    for (AnalyticSeries& a : comp) a = scale(a, shrink);
    return PolyFunction(std::move(comp));
}

PolyFunction gen_starlike(const GeneratorSpec& spec) {
    if (spec.alpha < 2) throw std::domain_error("gen_starlike: alpha < 2");
    Rng rng(mix64(spec.seed));
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        std::vector<AnalyticSeries> comp{AnalyticSeries::zero()};
        for (int k = 1; k < spec.alpha; ++k) {
            const double cm = rng.uniform(0.5, 1.5);
            const cpx c = cm * rng.unit_phase();
            comp.push_back(scale(starlike_factor(rng, spec.truncation), c));
        }
        PolyFunction f(std::move(comp));
        bool ok = true;
        for (std::size_t k = 1; k < f.order(); ++k)
            if (!is_starlike(f.component(k), 64)) ok = false;
        if (ok) return f;
    }
    throw std::runtime_error("gen_starlike: rejection budget exhausted");
}

PolyFunction gen_moment(const GeneratorSpec& spec) {
    if (spec.truncation < 8) throw std::domain_error("gen_moment: truncation < 8");
    Rng rng(mix64(spec.seed));
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        const AnalyticSeries phi = starlike_factor(rng, spec.truncation - 1);
        if (!is_starlike(phi, 64)) continue;
        return PolyFunction({AnalyticSeries::zero(), mul_by_z(phi)});
    }
    throw std::runtime_error("gen_moment: rejection budget exhausted");
}

PolyFunction gen_area(const GeneratorSpec& spec) {
    if (spec.truncation < 8) throw std::domain_error("gen_area: truncation < 8");
    Rng rng(mix64(spec.seed));
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        const AnalyticSeries phi = starlike_factor(rng, spec.truncation - 1);
        if (!is_starlike(phi, 64)) continue;
        const AnalyticSeries a = mul_by_z(phi);

        // B' = gamma q A'/z with Re q > 0, keeping Re(conj(z) A' conj(B')) >= 0
        const double gamma = rng.uniform() < 0.15 ? 0.0 : rng.uniform(0.1, 1.2);
        const double um = rng.uniform(0.0, 0.6);
        const cpx u = um * rng.unit_phase();
        std::vector<cpx> qc(17, cpx{});
        qc[0] = cpx{1.0, 0.0};
        cpx up = u;
        for (std::size_t n = 1; n < qc.size(); ++n) {
            qc[n] = 2.0 * up;
            up *= u;
        }
        const AnalyticSeries g = divide_by_z(derivative(a));
        AnalyticSeries b = scale(
            antiderivative(mul(AnalyticSeries(std::move(qc)), g, spec.truncation + 32)),
            cpx{gamma, 0.0});
        const double cm = rng.uniform(0.0, 2.0);
        const cpx c = cm * rng.unit_phase();
        b = add(b, AnalyticSeries({c}));
        return PolyFunction({b, a});
    }
    throw std::runtime_error("gen_area: rejection budget exhausted");
}

AnalyticSeries gen_starlike_series(std::uint64_t seed, std::size_t truncation) {
    Rng rng(mix64(seed));
    const double cm = rng.uniform(0.5, 1.5);
    const cpx c = cm * rng.unit_phase();
    return scale(starlike_factor(rng, truncation), c);
}

AnalyticSeries gen_nonstarlike_series(std::uint64_t seed) {
    Rng rng(mix64(seed));
    const std::size_t m = 2 + std::size_t(rng.raw() % 3);
    const double u = rng.uniform(1.15, 1.9);
    std::vector<cpx> c(m + 1, cpx{});
    c[1] = cpx{1.0, 0.0};
    c[m] = cpx{-u / double(m), 0.0};
    return AnalyticSeries(std::move(c));
}

}  // namespace polyan
