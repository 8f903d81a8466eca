#include "qcube/report_json.hpp"

#include "qcube/version.hpp"

namespace qcube::report {

Json header() {
  Json j;
  j["version"] = std::string("qcube ") + kVersion;
  return j;
}

Json cycle_json(const std::optional<Cycle>& cycle) {
  if (!cycle) return nullptr;
  return cycle->to_strings();
}

Json edge_json(const Edge& e, const Coloring* coloring) {
  Json j;
  j["low"] = e.low().to_string();
  j["high"] = e.high().to_string();
  j["position"] = e.position();
  j["layer"] = e.layer();
  j["prefix_weight"] = e.prefix_weight();
  j["suffix_weight"] = e.suffix_weight();
  if (coloring) {
    const ColorId c = coloring->color(e);
    j["color"] = c.value;
  }
  return j;
}

Json mono_result_json(const MonoSearchResult& r) {
  Json j;
  j["length"] = r.length;
  j["induced"] = r.induced;
  j["count_searched_classes"] = r.classes_searched;
  j["layer_restricted"] = r.layer_restricted;
  j["mono_cycles"] = r.mono_cycles;
  j["work_units"] = r.work_units;
  j["witness"] = cycle_json(r.witness);
  return j;
}

Json search_report_json(const SearchReport& r, const std::string& coloring_label, const std::string& subgraph_label) {
  Json j = header();
  const SearchQuery& q = r.query;
  j["n"] = q.n;
  j["length"] = q.length;
  j["induced"] = q.induced;
  j["layer"] = q.layer ? Json(*q.layer) : Json(nullptr);
  j["coloring"] = q.coloring ? Json(coloring_label) : Json(nullptr);
  j["color"] = q.color ? Json(*q.color) : Json(nullptr);
  j["subgraph"] = q.subgraph ? Json(subgraph_label) : Json(nullptr);
  j["guard"] = {{"max_n", enumeration_guard(q.length)}, {"force", q.force}};
  j["count"] = r.count;
  j["work_units"] = r.work_units;
  j["witness"] = cycle_json(r.witness);
  return j;
}

Json scan_census_json(const ScanCensus& c) {
  Json j = header();
  j["total"] = c.total;
  for (int f = 0; f < kScanFilterCount; ++f) {
    j[std::string("after_") + kScanFilterLetters[static_cast<std::size_t>(f)]] = c.after[static_cast<std::size_t>(f)];
  }
  Json dropped = Json::array();
  for (ScanFilter f : c.dropped) dropped.push_back(std::string(1, kScanFilterLetters[static_cast<std::size_t>(f)]));
  j["dropped"] = dropped;
  j["survivors"] = c.survivors;
  j["first_survivor"] = c.first_survivor ? Json(scan_matrix(*c.first_survivor).to_strings()) : Json(nullptr);
  return j;
}

Json formula_json(const BoundFormula& f) {
  Json j;
  j["n"] = f.n;
  j["e_max"] = f.e_max ? Json(*f.e_max) : Json(nullptr);
  j["log2_e_max"] = f.log2_e_max;
  j["ratio"] = f.ratio;
  j["printed_a_bound"] = f.printed_a_bound;
  j["relative_residual"] = f.relative_residual;
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["path2_count"] = r.path2;
  j["hv_edge_total"] = r.hv_edges;
  j["identity_holds"] = r.path2 == r.hv_edges;
  j["rhs"] = r.rhs;
  j["cauchy_schwarz_lower"] = r.cauchy_schwarz_lower;
  j["edge_ratio"] = r.n > 0 ? static_cast<double>(r.edges) / static_cast<double>(edge_count(r.n)) : 0.0;
  return j;
}

Json lift_report_json(const LiftReport& r) {
  Json j;
  j["k"] = r.k;
  j["lifted_length"] = 4 * r.k + 2;
  j["centers_with_odd_cycle"] = r.centers_with_odd_cycle;
  j["odd_cycles"] = r.odd_cycles;
  j["lifts_verified"] = r.lifts_verified;
  j["lifts_failed"] = r.lifts_failed;
  j["sound"] = r.sound();
  if (r.first_witness) {
    Json w;
    w["center"] = r.first_witness->center.to_string();
    Json hv = Json::array();
    for (const Vertex& v : r.first_witness->hv_cycle) hv.push_back(v.to_string());
    w["hv_cycle"] = hv;
    w["lifted"] = r.first_witness->lifted.to_strings();
    j["first_witness"] = w;
  } else {
    j["first_witness"] = nullptr;
  }
  return j;
}

Json cap_check_json(const EdgeCapCheck& c) {
  Json j;
  j["premise_holds"] = c.premise_holds;
  j["max_hv_edges"] = c.max_hv_edges;
  j["cap"] = c.cap;
  j["cap_holds"] = c.premise_holds ? Json(c.cap_holds) : Json("exempt");
  return j;
}

Json audit_json(const LayerCycleAudit& a) {
  Json j;
  j["n"] = a.n;
  j["length"] = a.length;
  j["cycles"] = a.cycles;
  j["induced"] = a.induced;
  j["position_set_sizes"] = a.position_set_sizes;
  j["matrix_invariant_failures"] = a.matrix_invariant_failures;
  j["column_interval_failures"] = a.column_interval_failures;
  j["monochromatic"] = a.monochromatic;
  j["induced_with_bad_prefixes"] = a.induced_with_bad_prefixes;
  j["bad_prefix_counterexamples"] = a.bad_prefix_counterexamples;
  j["with_chord_pattern"] = a.with_chord_pattern;
  j["chord_pattern_outside_premise"] = a.chord_pattern_outside_premise;
  j["chord_pattern_counterexamples"] = a.chord_pattern_counterexamples;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcube::report
