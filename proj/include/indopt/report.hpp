#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "indopt/dominance.hpp"
#include "indopt/polynomial.hpp"
#include "indopt/search.hpp"

namespace indopt {

using Json = nlohmann::ordered_json;

/// Coefficients as an array of decimal strings.
Json to_json(const IntPolynomial& f);
Json to_json(const DominanceVerdict& v);
Json to_json(const PolyGraph& pg);

/// report.json layout: spec, verdict, witnesses (graph6 + polynomial),
/// refutation (two graphs + dominance with "p/q" witnesses), statistics.
/// Wall time is written only with `include_timing` so that identical runs
/// produce identical bytes.
Json to_json(const OptimalityReport& report, bool include_timing = false);
OptimalityReport report_from_json(const Json& j);

std::string csv_header();
/// n,m,k,objective,verdict,witness,runtime_ms. The witness column holds
/// the first witness's graph6, or both refutation graphs joined by ';'.
std::string csv_row(const OptimalityReport& report, bool include_timing = false);

}  // namespace indopt
