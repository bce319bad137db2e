#pragma once

#include <string>

#include <json.hpp>

#include "polyan/polyfun.hpp"
#include "polyan/report.hpp"
#include "polyan/suites.hpp"

namespace polyan {

using ojson = nlohmann::ordered_json;

// series <-> [[re, im], ...]
ojson series_to_json(const AnalyticSeries& s);
AnalyticSeries series_from_json(const ojson& j);

// polyfunction <-> {"order": n, "components": [series, ...]}
ojson polyfun_to_json(const PolyFunction& f);
PolyFunction polyfun_from_json(const ojson& j);

ojson report_to_json(const BoundReport& r);
ojson radius_to_json(const RadiusResult& r);
ojson suite_to_json(const SuiteResult& s);

PolyFunction read_polyfun(const std::string& path);
void write_polyfun(const std::string& path, const PolyFunction& f);

}  // namespace polyan
