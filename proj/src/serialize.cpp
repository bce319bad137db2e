#include "polyan/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace polyan {

ojson series_to_json(const AnalyticSeries& s) {
    ojson arr = ojson::array();
    for (const cpx& a : s.coeffs()) arr.push_back({a.real(), a.imag()});
    return arr;
}

AnalyticSeries series_from_json(const ojson& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("series json must be a nonempty array of [re, im]");
    std::vector<cpx> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("series entry must be [re, im]");
        c.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return AnalyticSeries(std::move(c));
}

ojson polyfun_to_json(const PolyFunction& f) {
    ojson j;
    j["order"] = f.order();
    ojson comps = ojson::array();
    for (const AnalyticSeries& a : f.components()) comps.push_back(series_to_json(a));
    j["components"] = comps;
    return j;
}

PolyFunction polyfun_from_json(const ojson& j) {
    if (!j.contains("order") || !j.contains("components"))
        throw std::invalid_argument("polyfunction json needs order and components");
    const auto& comps = j["components"];
    if (!comps.is_array() || comps.empty())
        throw std::invalid_argument("polyfunction components must be a nonempty array");
    if (j["order"].get<std::size_t>() != comps.size())
        throw std::invalid_argument("polyfunction order does not match component count");
    std::vector<AnalyticSeries> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(series_from_json(c));
    return PolyFunction(std::move(parts));
}

ojson report_to_json(const BoundReport& r) {
    ojson j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    j["flags"] = {{"orientation_preserving", r.flags.orientation_preserving},
                  {"image_in_disk", r.flags.image_in_disk},
                  {"univalent_base", r.flags.univalent_base},
                  {"omits_two_points", r.flags.omits_two_points}};
    j["seed"] = r.seed;
    j["pass"] = r.pass;
    j["details"] = r.details;
    return j;
}

ojson radius_to_json(const RadiusResult& r) {
    ojson j;
    j["radius"] = r.radius;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["bracket"] = {r.bracket_lo, r.bracket_hi};
    return j;
}

ojson suite_to_json(const SuiteResult& s) {
    ojson j;
    j["suite"] = s.suite;
    j["trials"] = s.trials;
    j["passes"] = s.passes;
    j["regenerated"] = s.regenerated;
    j["worst_margin"] = s.worst_margin;
    ojson fails = ojson::array();
    for (const BoundReport& r : s.failures) fails.push_back(report_to_json(r));
    j["failures"] = fails;
    return j;
}

PolyFunction read_polyfun(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ojson j;
    in >> j;
    return polyfun_from_json(j);
}

void write_polyfun(const std::string& path, const PolyFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << polyfun_to_json(f).dump(2) << "\n";
}

}  // namespace polyan
