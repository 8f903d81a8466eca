#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qcube/coloring.hpp"
#include "qcube/cycle_search.hpp"
#include "qcube/extremal.hpp"
#include "qcube/hypercube.hpp"
#include "qcube/matrix_analysis.hpp"

namespace qcube::report {

using Json = nlohmann::ordered_json;

/// Fresh report object carrying the tool version.
Json header();

Json cycle_json(const std::optional<Cycle>& cycle);
Json edge_json(const Edge& e, const Coloring* coloring = nullptr);
Json mono_result_json(const MonoSearchResult& r);
Json search_report_json(const SearchReport& r, const std::string& coloring_label, const std::string& subgraph_label);
Json scan_census_json(const ScanCensus& c);
Json formula_json(const BoundFormula& f);
Json bound_report_json(const BoundReport& r);
Json lift_report_json(const LiftReport& r);
Json cap_check_json(const EdgeCapCheck& c);
Json audit_json(const LayerCycleAudit& a);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace qcube::report
