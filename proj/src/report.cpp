#include "indopt/report.hpp"

#include <sstream>
#include <stdexcept>

#include "indopt/graph_io.hpp"

namespace indopt {
namespace {

IntPolynomial polynomial_from_json(const Json& j) {
  return from_decimal_strings(j.get<std::vector<std::string>>());
}

PolyGraph poly_graph_from_json(const Json& j) {
  return {graph6_decode(j.at("graph6").get<std::string>()), polynomial_from_json(j.at("polynomial"))};
}

Dominance parse_dominance(const std::string& tag) {
  for (Dominance d : {Dominance::kEqual, Dominance::kCoeffwiseGe, Dominance::kEverywhereGe,
                      Dominance::kEverywhereLe, Dominance::kCrosses}) {
    if (to_string(d) == tag) return d;
  }
  throw std::invalid_argument("unknown dominance verdict \"" + tag + "\"");
}

}  // namespace

Json to_json(const IntPolynomial& f) { return Json(to_decimal_strings(f)); }

Json to_json(const DominanceVerdict& v) {
  Json j;
  j["verdict"] = std::string(to_string(v.tag));
  if (v.x_lo) j["x_lo"] = to_string(*v.x_lo);
  if (v.x_hi) j["x_hi"] = to_string(*v.x_hi);
  return j;
}

Json to_json(const PolyGraph& pg) {
  Json j;
  j["graph6"] = graph6_encode(pg.graph);
  j["polynomial"] = to_json(pg.polynomial);
  return j;
}

Json to_json(const OptimalityReport& report, bool include_timing) {
  Json j;
  j["spec"] = {{"n", report.spec.n},
               {"m", report.spec.m},
               {"k", report.spec.k},
               {"objective", std::string(to_string(report.spec.objective))}};
  j["verdict"] = std::string(to_string(report.verdict));
  j["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) j["witnesses"].push_back(to_json(w));
  if (report.refutation) {
    j["refutation"] = {{"graphs", {to_json(report.refutation->first), to_json(report.refutation->second)}},
                       {"dominance", to_json(report.refutation->verdict)}};
  } else {
    j["refutation"] = nullptr;
  }
  const SearchStatistics& s = report.stats;
  Json stats;
  stats["source"] = s.source;
  stats["class_size"] = s.class_size;
  stats["graphs_examined"] = s.graphs_examined;
  stats["isomorphism_classes"] =
      s.isomorphism_classes ? Json(*s.isomorphism_classes) : Json(nullptr);
  stats["distinct_polynomials"] = s.distinct_polynomials;
  stats["dominance_checks"] = s.dominance_checks;
  if (include_timing) stats["wall_seconds"] = s.wall_seconds;
  j["statistics"] = stats;
  return j;
}

OptimalityReport report_from_json(const Json& j) {
  OptimalityReport r;
  const Json& spec = j.at("spec");
  r.spec.n = spec.at("n").get<int>();
  r.spec.m = spec.at("m").get<int>();
  r.spec.k = spec.at("k").get<int>();
  const auto objective = parse_objective(spec.at("objective").get<std::string>());
  const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!objective || !verdict) throw std::invalid_argument("bad objective or verdict in report");
  r.spec.objective = *objective;
  r.verdict = *verdict;
  for (const Json& w : j.at("witnesses")) r.witnesses.push_back(poly_graph_from_json(w));
  if (const Json& ref = j.at("refutation"); !ref.is_null()) {
    const Json& d = ref.at("dominance");
    DominanceVerdict v;
    v.tag = parse_dominance(d.at("verdict").get<std::string>());
    if (d.contains("x_lo")) v.x_lo = parse_rational(d.at("x_lo").get<std::string>());
    if (d.contains("x_hi")) v.x_hi = parse_rational(d.at("x_hi").get<std::string>());
    r.refutation = Refutation{poly_graph_from_json(ref.at("graphs").at(0)),
                              poly_graph_from_json(ref.at("graphs").at(1)), v};
  }
  const Json& s = j.at("statistics");
  r.stats.source = s.at("source").get<std::string>();
  r.stats.class_size = s.at("class_size").get<std::uint64_t>();
  r.stats.graphs_examined = s.at("graphs_examined").get<std::uint64_t>();
  if (!s.at("isomorphism_classes").is_null()) {
    r.stats.isomorphism_classes = s.at("isomorphism_classes").get<std::uint64_t>();
  }
  r.stats.distinct_polynomials = s.at("distinct_polynomials").get<std::uint64_t>();
  r.stats.dominance_checks = s.at("dominance_checks").get<std::uint64_t>();
  if (s.contains("wall_seconds")) r.stats.wall_seconds = s.at("wall_seconds").get<double>();
  return r;
}

std::string csv_header() { return "n,m,k,objective,verdict,witness,runtime_ms"; }

std::string csv_row(const OptimalityReport& report, bool include_timing) {
  std::ostringstream out;
  out << report.spec.n << ',' << report.spec.m << ',' << report.spec.k << ','
      << to_string(report.spec.objective) << ',' << to_string(report.verdict) << ',';
  if (!report.witnesses.empty()) {
    out << graph6_encode(report.witnesses.front().graph);
  } else if (report.refutation) {
    out << graph6_encode(report.refutation->first.graph) << ';'
        << graph6_encode(report.refutation->second.graph);
  }
  out << ',';
  if (include_timing) out << static_cast<long long>(report.stats.wall_seconds * 1000.0);
  return out.str();
}

}  // namespace indopt
