#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "polyan/bohr.hpp"
#include "polyan/generators.hpp"
#include "polyan/geometry.hpp"
#include "polyan/landau.hpp"
#include "polyan/quadrature.hpp"
#include "polyan/serialize.hpp"
#include "polyan/series.hpp"
#include "polyan/suites.hpp"

namespace {

using polyan::ojson;

std::string choose(const std::string& flag, const char* dflt) {
    return flag.empty() ? std::string(dflt) : flag;
}

void emit_flat(const ojson& j, const std::string& fmt) {
    if (fmt == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (fmt == "csv") {
        std::string head, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!head.empty()) {
                head += ',';
                row += ',';
            }
            head += it.key();
            row += it.value().is_null() ? std::string("nan") : it.value().dump();
        }
        std::printf("%s\n%s\n", head.c_str(), row.c_str());
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string v =
            it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        std::printf("%-14s %s\n", it.key().c_str(), v.c_str());
    }
}

int dispatch(int argc, char** argv) {
    CLI::App app{"numerical toolkit for poly-analytic functions on the unit disk"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file with [subcommand] sections");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::string format;
    double tolerance = 1e-10;
    std::size_t truncation = 64;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--tolerance", tolerance, "quadrature refinement stop");
    app.add_option("--truncation", truncation, "series truncation degree");
    app.add_option("--seed", seed, "generator seed")->envname("POLYAN_SEED");

    double M = 1.0;
    int alpha = 2;
    auto* cmd_landau =
        app.add_subcommand("landau", "univalence radius rho1 and covering radius R1");
    cmd_landau->add_option("--M", M, "uniform component bound");
    cmd_landau->add_option("--alpha", alpha, "poly-analytic order");

    int alpha_max = 100;
    auto* cmd_bohr =
        app.add_subcommand("bohr-table", "majorant radius for each order up to alpha-max");
    cmd_bohr->add_option("--alpha-max", alpha_max)->check(CLI::Range(2, 1 << 20));

    std::string fn_arc;
    double r_arc = 0.5;
    auto* cmd_arc =
        app.add_subcommand("arclength", "curve length on |z| = r against the starlike bound");
    cmd_arc->add_option("--fn", fn_arc, "function file")->required()->check(CLI::ExistingFile);
    cmd_arc->add_option("--r", r_arc, "circle radius")->required();

    std::string fn_mom;
    double r_mom = 0.5;
    double p_mom = 0.0;
    auto* cmd_mom = app.add_subcommand("moments", "weighted Jacobian moment over |z| <= r");
    cmd_mom->add_option("--fn", fn_mom, "function file")->required()->check(CLI::ExistingFile);
    cmd_mom->add_option("--r", r_mom, "disk radius")->required();
    cmd_mom->add_option("--p", p_mom, "modulus exponent");

    std::string suite = "all";
    int trials = 50;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> allowed = polyan::suite_names();
    allowed.push_back("all");
    cmd_verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(allowed));
    cmd_verify->add_option("--trials", trials)->check(CLI::PositiveNumber);

    std::string family;
    std::string out_path;
    double gen_M = 2.0;
    int gen_alpha = 2;
    auto* cmd_gen = app.add_subcommand("gen", "draw a random instance and write it as JSON");
    cmd_gen->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"landau", "bohr", "starlike", "moment", "area"}));
    cmd_gen->add_option("--out", out_path, "output file")->required();
    cmd_gen->add_option("--M", gen_M, "class bound (landau family)");
    cmd_gen->add_option("--alpha", gen_alpha, "order (landau, bohr, starlike families)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_landau->parsed()) {
        const polyan::RadiusResult rho = polyan::landau_rho(M, alpha);
        const double R1 = polyan::landau_R(rho.radius, M, alpha);
        const std::string fmt = choose(format, "table");
        if (fmt == "json") {
            ojson j;
            j["M"] = M;
            j["alpha"] = alpha;
            j["rho1"] = polyan::radius_to_json(rho);
            j["R1"] = R1;
            if (alpha == 2) j["rho1_closed_form"] = polyan::bianalytic_rho(M).radius;
            std::cout << j.dump(2) << "\n";
        } else if (fmt == "csv") {
            std::printf("M,alpha,rho1,R1,residual,iterations\n");
            std::printf("%.12g,%d,%.17g,%.17g,%.3e,%d\n", M, alpha, rho.radius, R1, rho.residual,
                        rho.iterations);
        } else {
            std::printf("%-12s %.12g\n", "M", M);
            std::printf("%-12s %d\n", "alpha", alpha);
            std::printf("%-12s %.17g\n", "rho1", rho.radius);
            std::printf("%-12s %.17g\n", "R1", R1);
            std::printf("%-12s %.3e\n", "residual", rho.residual);
            std::printf("%-12s %d\n", "iterations", rho.iterations);
        }
        return 0;
    }

    if (cmd_bohr->parsed()) {
        const std::string fmt = choose(format, "table");
        if (fmt == "json") {
            ojson rows = ojson::array();
            for (int a = 2; a <= alpha_max; ++a) {
                const polyan::RadiusResult r0 = polyan::bohr_radius(a);
                ojson row;
                row["alpha"] = a;
                row["radius"] = r0.radius;
                row["residual"] = r0.residual;
                rows.push_back(std::move(row));
            }
            std::cout << rows.dump(2) << "\n";
        } else if (fmt == "csv") {
            std::printf("alpha,radius,residual\n");
            for (int a = 2; a <= alpha_max; ++a) {
                const polyan::RadiusResult r0 = polyan::bohr_radius(a);
                std::printf("%d,%.9f,%.3e\n", a, r0.radius, r0.residual);
            }
        } else {
            std::printf("%6s %14s %12s\n", "alpha", "radius", "residual");
            for (int a = 2; a <= alpha_max; ++a) {
                const polyan::RadiusResult r0 = polyan::bohr_radius(a);
                std::printf("%6d %14.9f %12.3e\n", a, r0.radius, r0.residual);
            }
        }
        return 0;
    }

    if (cmd_arc->parsed()) {
        const polyan::PolyFunction f = polyan::read_polyfun(fn_arc);
        polyan::QuadratureConfig q;
        q.tolerance = tolerance;
        const polyan::QuadValue L = polyan::arclength(f, r_arc, q);
        bool hyp = f.order() >= 2 && polyan::is_zero(f.component(0));
        double mr = 0.0;
        if (hyp) {
            try {
                for (std::size_t k = 1; k < f.order(); ++k) {
                    if (!polyan::is_starlike(f.component(k), 64)) hyp = false;
                    mr = std::max(mr, polyan::max_modulus(f.component(k), r_arc));
                }
            } catch (const std::domain_error&) {
                hyp = false;
            }
        }
        ojson j;
        j["value"] = L.value;
        double margin = 0.0;
        if (hyp) {
            const double bound = polyan::arclength_bound(int(f.order()), mr, r_arc);
            margin = bound - L.value;
            j["bound"] = bound;
            j["margin"] = margin;
        } else {
            j["bound"] = nullptr;
            j["margin"] = nullptr;
        }
        j["panels"] = L.panels;
        emit_flat(j, choose(format, "json"));
        return hyp && margin < -1e-9 ? 1 : 0;
    }

    if (cmd_mom->parsed()) {
        const polyan::PolyFunction f = polyan::read_polyfun(fn_mom);
        polyan::QuadratureConfig q;
        q.tolerance = tolerance;
        const polyan::QuadValue v = polyan::moment_p(f, r_mom, p_mom, q);
        bool hyp = f.order() == 2 && polyan::is_zero(f.component(0));
        if (hyp) {
            try {
                const polyan::AnalyticSeries phi = polyan::divide_by_z(f.component(1));
                hyp = std::abs(phi.coeff(1) - polyan::cpx{1.0, 0.0}) <= 1e-12 &&
                      polyan::is_starlike(phi, 64);
            } catch (const std::domain_error&) {
                hyp = false;
            }
        }
        ojson j;
        j["value"] = v.value;
        double margin = 0.0;
        if (hyp) {
            const double bound = polyan::moment_lower_bound(p_mom, r_mom);
            margin = v.value - bound;
            j["bound"] = bound;
            j["margin"] = margin;
        } else {
            j["bound"] = nullptr;
            j["margin"] = nullptr;
        }
        j["panels"] = v.panels;
        emit_flat(j, choose(format, "json"));
        return hyp && margin < -1e-9 ? 1 : 0;
    }

    if (cmd_verify->parsed()) {
        std::vector<std::string> names;
        if (suite == "all")
            names = polyan::suite_names();
        else
            names.push_back(suite);
        std::vector<polyan::SuiteResult> results;
        results.reserve(names.size());
        for (const std::string& n : names)
            results.push_back(polyan::run_suite(n, trials, seed, truncation));
        bool all_pass = true;
        for (const polyan::SuiteResult& r : results) all_pass = all_pass && r.passes == r.trials;
        const std::string fmt = choose(format, "table");
        if (fmt == "json") {
            ojson j;
            j["seed"] = seed;
            j["trials"] = trials;
            ojson arr = ojson::array();
            for (const polyan::SuiteResult& r : results) arr.push_back(polyan::suite_to_json(r));
            j["suites"] = std::move(arr);
            j["pass"] = all_pass;
            std::cout << j.dump(2) << "\n";
        } else if (fmt == "csv") {
            std::printf("suite,trials,passes,regenerated,worst_margin\n");
            for (const polyan::SuiteResult& r : results)
                std::printf("%s,%d,%d,%d,%.17g\n", r.suite.c_str(), r.trials, r.passes,
                            r.regenerated, r.worst_margin);
        } else {
            std::printf("%-20s %7s %7s %6s %14s\n", "suite", "trials", "passes", "regen",
                        "worst_margin");
            for (const polyan::SuiteResult& r : results)
                std::printf("%-20s %7d %7d %6d %14.6e\n", r.suite.c_str(), r.trials, r.passes,
                            r.regenerated, r.worst_margin);
            std::printf("%s\n", all_pass ? "PASS" : "FAIL");
        }
        return all_pass ? 0 : 1;
    }

    // gen
    polyan::GeneratorSpec gs;
    gs.seed = seed;
    gs.alpha = gen_alpha;
    gs.M = gen_M;
    gs.truncation = truncation;
    const polyan::PolyFunction f = [&] {
        if (family == "landau") return polyan::gen_landau(gs);
        if (family == "bohr") return polyan::gen_bohr(gs);
        if (family == "starlike") return polyan::gen_starlike(gs);
        if (family == "moment") return polyan::gen_moment(gs);
        return polyan::gen_area(gs);
    }();
    polyan::write_polyfun(out_path, f);
    ojson j;
    j["family"] = family;
    j["seed"] = seed;
    j["order"] = f.order();
    j["out"] = out_path;
    emit_flat(j, choose(format, "table"));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
