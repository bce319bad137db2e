#include <doctest.h>

#include <filesystem>
#include <stdexcept>

#include "polyan/landau.hpp"
#include "polyan/serialize.hpp"
#include "polyan/series.hpp"
#include "polyan/suites.hpp"

using namespace polyan;

TEST_CASE("series json roundtrip") {
    AnalyticSeries s({{0.25, -1.5}, {1.0, 0.0}, {0.0, 3.1415926535897931}});
    const AnalyticSeries back = series_from_json(series_to_json(s));
    REQUIRE(back.degree() == s.degree());
    for (std::size_t n = 0; n <= s.degree(); ++n) CHECK(back.coeff(n) == s.coeff(n));

    CHECK_THROWS(series_from_json(ojson::array()));
    ojson bad = ojson::array();
    bad.push_back(ojson::array({1.0}));
    CHECK_THROWS(series_from_json(bad));
}

TEST_CASE("polyfun json roundtrip") {
    const PolyFunction f({AnalyticSeries::koebe(12), AnalyticSeries::monomial(3, cpx{0.0, 2.0})});
    const ojson j = polyfun_to_json(f);
    CHECK(j.at("order") == 2);
    const PolyFunction back = polyfun_from_json(j);
    REQUIRE(back.order() == f.order());
    for (std::size_t k = 0; k < f.order(); ++k) {
        const auto& a = f.component(k);
        const auto& b = back.component(k);
        REQUIRE(a.degree() == b.degree());
        for (std::size_t n = 0; n <= a.degree(); ++n) CHECK(a.coeff(n) == b.coeff(n));
    }

    ojson mismatched = j;
    mismatched["order"] = 3;
    CHECK_THROWS(polyfun_from_json(mismatched));
}

TEST_CASE("report and radius json shape") {
    BoundReport r;
    r.lhs = 0.5;
    r.rhs = 1.0;
    r.margin = 0.5;
    r.pass = true;
    r.details["x"] = 2.0;
    const ojson j = report_to_json(r);
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));
    CHECK(j.contains("margin"));
    CHECK(j.contains("flags"));
    CHECK(j.contains("pass"));
    CHECK(j.at("details").at("x") == 2.0);

    const ojson rj = radius_to_json(landau_rho(1.0, 2));
    CHECK(rj.contains("radius"));
    CHECK(rj.contains("residual"));
    CHECK(rj.contains("iterations"));
    CHECK(rj.at("bracket").size() == 2);

    const ojson sj = suite_to_json(run_suite("linkage", 2, 1));
    CHECK(sj.at("suite") == "linkage");
    CHECK(sj.at("trials") == 2);
    CHECK(sj.contains("worst_margin"));
    CHECK(sj.contains("failures"));
}

TEST_CASE("polyfun file roundtrip") {
    const auto path =
        (std::filesystem::temp_directory_path() / "polyan_serialize_test.json").string();
    const PolyFunction f({AnalyticSeries::identity(), AnalyticSeries::koebe(6)});
    write_polyfun(path, f);
    const PolyFunction back = read_polyfun(path);
    REQUIRE(back.order() == 2);
    CHECK(back.component(1).coeff(5) == f.component(1).coeff(5));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_polyfun(path), std::runtime_error);
}
