#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polyan/generators.hpp"
#include "polyan/kernels.hpp"
#include "polyan/polyfun.hpp"
#include "polyan/suites.hpp"

namespace {

using clk = std::chrono::steady_clock;

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, const std::string& agree) {
    std::printf("%-24s %10.2f %10.2f %8.2fx %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0, agree.c_str());
}

std::string exact_or(bool agree) { return agree ? "exact" : "DIFFERS"; }

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-24s %10s %10s %9s %s\n", "kernel", "serial ms", "omp ms", "speedup",
                "agreement");

    polyan::GeneratorSpec gs;
    gs.seed = 99;
    gs.alpha = 3;
    const polyan::PolyFunction f = polyan::gen_landau(gs);

    {
        const auto pts = polyan::kernels::polar_grid(0.9, 48, 48);
        std::vector<polyan::cpx> vals(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = eval_poly(f, pts[i]);
        auto t0 = clk::now();
        const double a = polyan::kernels::min_pairwise_ratio_serial(pts, vals);
        const double ts = ms_since(t0);
        t0 = clk::now();
        const double b = polyan::kernels::min_pairwise_ratio(pts, vals);
        const double tp = ms_since(t0);
        row("pairwise ratio 48x48", ts, tp, exact_or(a == b));
    }

    {
        const std::size_t n = std::size_t(1) << 15;
        const auto g = [&](std::size_t i) {
            const double th = 2.0 * 3.14159265358979323846 * double(i) / double(n);
            return std::abs(eval_poly(f, std::polar(0.8, th)));
        };
        auto t0 = clk::now();
        double a = 0.0;
        for (int rep = 0; rep < 8; ++rep) a = polyan::kernels::sum_indexed_serial(n, g);
        const double ts = ms_since(t0);
        t0 = clk::now();
        double b = 0.0;
        for (int rep = 0; rep < 8; ++rep) b = polyan::kernels::sum_indexed(n, g);
        const double tp = ms_since(t0);
        // the blocked reduction rounds differently from the straight loop;
        // bitwise agreement is only promised across thread counts
        char rel[32];
        std::snprintf(rel, sizeof(rel), "rel %.1e", std::abs(a - b) / std::abs(a));
        row("circle sum 32768x8", ts, tp, rel);
    }

    {
        const std::size_t n = std::size_t(1) << 15;
        const auto g = [&](std::size_t i) {
            const double th = 2.0 * 3.14159265358979323846 * double(i) / double(n);
            return -std::abs(eval_poly(f, std::polar(0.97, th)));
        };
        auto t0 = clk::now();
        double a = 0.0;
        for (int rep = 0; rep < 8; ++rep) a = polyan::kernels::min_indexed_serial(n, g);
        const double ts = ms_since(t0);
        t0 = clk::now();
        double b = 0.0;
        for (int rep = 0; rep < 8; ++rep) b = polyan::kernels::min_indexed(n, g);
        const double tp = ms_since(t0);
        row("circle argmin 32768x8", ts, tp, exact_or(a == b));
    }

    {
#ifdef _OPENMP
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        auto t0 = clk::now();
        const polyan::SuiteResult a = polyan::run_suite("calculus", 64, 1);
        const double ts = ms_since(t0);
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
        t0 = clk::now();
        const polyan::SuiteResult b = polyan::run_suite("calculus", 64, 1);
        const double tp = ms_since(t0);
        row("calculus suite x64", ts, tp,
            exact_or(a.passes == b.passes && a.worst_margin == b.worst_margin));
    }

    return 0;
}
