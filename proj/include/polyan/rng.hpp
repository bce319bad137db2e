#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "polyan/series.hpp"

namespace polyan {

// splitmix64; used to decorrelate per-trial seeds
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// mt19937_64 with explicit 53-bit uniforms. std::uniform_real_distribution is
// implementation-defined, which would break byte-identical reports across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t raw() { return g_(); }

    double uniform() { return double(g_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    cpx unit_phase() {
        return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
    }

private:
    std::mt19937_64 g_;
};

}  // namespace polyan
