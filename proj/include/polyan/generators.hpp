#pragma once

#include <cstdint>

#include "polyan/polyfun.hpp"

namespace polyan {

struct GeneratorSpec {
    std::uint64_t seed = 0;
    int alpha = 2;
    double M = 2.0;               // class bound for the landau family
    std::size_t truncation = 64;  // target polynomial degree
    int max_attempts = 1000;      // rejection budget for post-generation checks
};

// Normalized components A_k = z + sum_{n>=2} a_n z^n with sum_n |a_{n,k}| <= M.
// M = 1 yields identity components; M < 1 is a domain error.
PolyFunction gen_landau(const GeneratorSpec& spec);

// Univalent base A_0 (perturbed scaled identity, |A_0'(0)| <= 1), higher
// components with A_k' = a_k A_0' for a polynomial a_k of sup norm < 1, the
// whole function rescaled into the unit disk.
PolyFunction gen_bohr(const GeneratorSpec& spec);

// A_0 = 0 and A_k starlike for k >= 1: scaled rotations of z/(1 - wz)^{2t}
// with |w| <= 0.7 so that truncation keeps grid starlikeness.
PolyFunction gen_starlike(const GeneratorSpec& spec);

// Order 2, F = conj(z) A with A = z phi and phi starlike normalized.
PolyFunction gen_moment(const GeneratorSpec& spec);

// Order 2, F = conj(z) A + B with A = z phi as above and B = c + gamma
// integral of q A'/z for a positive-real-part factor q, so that
// Re(conj(z) A' conj(B')) >= 0 holds by construction.
PolyFunction gen_area(const GeneratorSpec& spec);

// Single starlike series (scaled rotation of z/(1 - wz)^{2t}, |w| <= 0.7).
AnalyticSeries gen_starlike_series(std::uint64_t seed, std::size_t truncation);

// z - c z^m with a critical point strictly inside the disk, hence not starlike
// there; the sign failure of Re(zA'/A) is detectable on the default grid.
AnalyticSeries gen_nonstarlike_series(std::uint64_t seed);

}  // namespace polyan
