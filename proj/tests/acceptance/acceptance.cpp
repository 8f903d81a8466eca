// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria 1-9 run twice with different thread counts and their
// JSON evidence must match byte for byte (criterion 10).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "oracle/naive.hpp"
#include "qcube/coloring.hpp"
#include "qcube/cycle_search.hpp"
#include "qcube/extremal.hpp"
#include "qcube/matrix_analysis.hpp"
#include "qcube/report_json.hpp"

namespace {

using qcube::report::Json;

struct Outcome {
  bool pass = true;
  Json evidence;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<Outcome(unsigned threads)> run;
};

struct Result {
  Outcome outcome;
  double seconds = 0.0;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

Outcome no_induced_mono(unsigned threads) {
  Outcome o;
  qcube::MonoSearchOptions opts;
  opts.threads = threads;
  for (int n = 3; n <= 6; ++n) {
    const auto report = qcube::verify_theorem1(n, opts);
    Json row;
    row["n"] = n;
    Json results = Json::array();
    for (const auto& r : report.results) {
      results.push_back(qcube::report::mono_result_json(r));
      require(o, !r.witness, "witness for C_" + std::to_string(r.length) + " at n=" + std::to_string(n));
    }
    row["results"] = results;
    require(o, report.passed, "n=" + std::to_string(n) + " not passed");
    o.evidence.push_back(row);
  }
  return o;
}

Outcome no_mono_six_cycle(unsigned threads) {
  Outcome o;
  qcube::MonoSearchOptions opts;
  opts.threads = threads;
  for (int n = 3; n <= 6; ++n) {
    const auto r = qcube::find_mono_cycle(qcube::Coloring::paper4(n), 6, false, opts);
    Json row = qcube::report::mono_result_json(r);
    row["n"] = n;
    o.evidence.push_back(row);
    require(o, !r.witness && r.mono_cycles == 0, "monochromatic C_6 at n=" + std::to_string(n));
  }
  return o;
}

Outcome two_coloring(unsigned threads) {
  Outcome o;
  qcube::MonoSearchOptions opts;
  opts.threads = threads;
  for (int n = 3; n <= 7; ++n) {
    const auto c = qcube::Coloring::layer2(n);
    const auto r = qcube::find_mono_cycle(c, 4, false, opts);
    const auto sizes = qcube::class_sizes(c);
    const std::uint64_t larger = std::max(sizes[0], sizes[1]);
    const std::uint64_t floor = static_cast<std::uint64_t>(n) << (n - 2);
    Json row = qcube::report::mono_result_json(r);
    row["n"] = n;
    row["class_sizes"] = sizes;
    row["required_min"] = floor;
    o.evidence.push_back(row);
    require(o, !r.witness, "monochromatic C_4 at n=" + std::to_string(n));
    require(o, larger >= floor, "larger class too small at n=" + std::to_string(n));
  }
  return o;
}

Outcome matrix_scan(unsigned threads) {
  Outcome o;
  qcube::ScanOptions full;
  full.threads = threads;
  const auto census = qcube::exhaustive_case_scan(full);
  qcube::ScanOptions relaxed = full;
  relaxed.dropped = {qcube::ScanFilter::NoBadPrefixes};
  const auto without_g = qcube::exhaustive_case_scan(relaxed);
  o.evidence["full"] = qcube::report::scan_census_json(census);
  o.evidence["drop_g"] = qcube::report::scan_census_json(without_g);
  require(o, census.total == (1u << 25), "wrong total");
  require(o, census.survivors == 0, "survivors remain");
  require(o, census.after[1] == 30240, "census after (a)+(b) is " + std::to_string(census.after[1]));
  require(o, without_g.survivors > 0, "dropping (g) leaves no survivors");
  return o;
}

Outcome bad_prefix_soundness(unsigned) {
  Outcome o;
  const auto audit = qcube::audit_layer_cycles(5, 10);
  o.evidence = qcube::report::audit_json(audit);
  require(o, audit.induced > 0, "no induced layer cycles audited");
  require(o, audit.induced_with_bad_prefixes > 0, "bad prefixes never occur (vacuous)");
  require(o, audit.bad_prefix_counterexamples == 0, "monochromatic cycle with bad prefixes");
  return o;
}

Outcome two_path_identity(unsigned) {
  Outcome o;
  std::uint64_t checked = 0;
  auto check = [&](const qcube::Subgraph& g, const std::string& label) {
    const auto c = qcube::verify_identity(g);
    ++checked;
    if (!c.holds()) {
      require(o, false, label);
      o.evidence["failures"].push_back({{"label", label}, {"path2", c.path_count}, {"hv", c.hv_edge_total}});
    }
    return c;
  };
  for (int n : {4, 5}) {
    std::uint64_t path_sum = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      path_sum += check(qcube::random_subgraph(n, 0.5, seed), "Q" + std::to_string(n) + " seed " + std::to_string(seed))
                      .path_count;
    }
    check(qcube::Subgraph(n), "empty Q" + std::to_string(n));
    check(qcube::Subgraph::full(n), "full Q" + std::to_string(n));
    o.evidence["path2_sum_Q" + std::to_string(n)] = path_sum;
  }
  o.evidence["graphs_checked"] = checked;
  return o;
}

Outcome odd_cycle_lifting(unsigned) {
  Outcome o;
  std::uint64_t hv_triangles_in_free = 0, lifted = 0, triangles = 0, rejections = 0, fallbacks = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto sample = qcube::sample_cycle_free(4, 6, 0.5, seed);
    rejections += static_cast<std::uint64_t>(sample.rejections);
    fallbacks += sample.fallback;
    qcube::SearchQuery q;
    q.n = 4;
    q.length = 6;
    q.subgraph = std::make_shared<qcube::Subgraph>(sample.graph);
    require(o, qcube::enumerate_cycles(q).count == 0, "sample " + std::to_string(seed) + " contains C_6");
    for (std::uint32_t v = 0; v < 16; ++v) {
      hv_triangles_in_free += qcube::odd_cycles(qcube::build_hv(sample.graph, qcube::Vertex(4, v)).adjacency, 3).size();
    }
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto r = qcube::odd_cycle_lift_check(qcube::random_subgraph(4, 0.5, seed), 1);
    triangles += r.odd_cycles;
    lifted += r.lifts_verified;
    require(o, r.sound(), "lift failed for seed " + std::to_string(seed));
  }
  o.evidence = {{"free_samples", 50},
                {"free_rejections", rejections},
                {"free_fallbacks", fallbacks},
                {"hv_triangles_in_free_samples", hv_triangles_in_free},
                {"unconstrained_samples", 50},
                {"hv_triangles", triangles},
                {"lifts_verified", lifted}};
  require(o, hv_triangles_in_free == 0, "triangle in H_v of a C_6-free sample");
  require(o, triangles > 0, "no triangles in unconstrained samples (vacuous)");
  require(o, lifted == triangles, "not every triangle lifted");
  return o;
}

Outcome bound_formula(unsigned) {
  Outcome o;
  const auto f2 = qcube::upper_bound_edges(2);
  const auto big = qcube::upper_bound_edges(10000);
  o.evidence["n2"] = qcube::report::formula_json(f2);
  o.evidence["n10000"] = qcube::report::formula_json(big);
  require(o, f2.e_max && *f2.e_max == 4.0, "E_max(2) != 4");
  require(o, std::abs(big.ratio - 1.0 / std::sqrt(2.0)) <= 1e-3, "ratio at n=10000 too far from 1/sqrt 2");
  double worst = 0.0;
  for (int n = 1; n <= 10000; n = n < 64 ? n + 1 : n * 2) {
    worst = std::max(worst, qcube::upper_bound_edges(n).relative_residual);
  }
  worst = std::max(worst, big.relative_residual);
  o.evidence["max_relative_residual_below_1e-12"] = worst <= 1e-12;
  require(o, worst <= 1e-12, "quadratic residual above 1e-12");
  return o;
}

Outcome enumeration_oracle(unsigned threads) {
  Outcome o;
  struct Case {
    int length;
    bool induced;
    std::uint64_t expected;
  };
  for (const Case& c : {Case{4, false, 6}, Case{6, false, 16}, Case{6, true, 4}}) {
    qcube::SearchQuery q;
    q.n = 3;
    q.length = c.length;
    q.induced = c.induced;
    q.threads = threads;
    const auto r = qcube::enumerate_cycles(q);
    const auto naive = oracle::all_cycles(3, c.length, c.induced).size();
    o.evidence.push_back({{"length", c.length}, {"induced", c.induced}, {"count", r.count}, {"oracle", naive}});
    require(o, r.count == c.expected && naive == c.expected,
            "Q3 C_" + std::to_string(c.length) + (c.induced ? " induced" : ""));
  }
  for (int length : {6, 8, 10}) {
    qcube::SearchQuery q;
    q.n = 5;
    q.length = length;
    q.threads = 1;
    const auto one = qcube::enumerate_cycles(q);
    q.threads = 4;
    const auto four = qcube::enumerate_cycles(q);
    const bool same = one.count == four.count && one.witness == four.witness && one.work_units == four.work_units;
    o.evidence.push_back({{"n", 5}, {"length", length}, {"count", one.count}, {"thread_invariant", same}});
    require(o, same, "thread dependence at Q5 C_" + std::to_string(length));
  }
  return o;
}

std::vector<Result> run_all(const std::vector<Criterion>& criteria, unsigned threads) {
  std::vector<Result> out;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r.outcome = c.run(threads);
    } catch (const std::exception& e) {
      r.outcome.pass = false;
      r.outcome.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "no induced monochromatic C4/C6/C10 under paper4, n=3..6", 600.0, no_induced_mono},
      {2, "no monochromatic C6 under paper4, n=3..6", 0.0, no_mono_six_cycle},
      {3, "layer2: no monochromatic C4 and large class, n=3..7", 0.0, two_coloring},
      {4, "5x5 case scan: 0 survivors, 30240 after (a)+(b), (g) load-bearing", 120.0, matrix_scan},
      {5, "bad prefixes force non-monochromatic induced layer C10 in Q5", 0.0, bad_prefix_soundness},
      {6, "two-path identity on seeded Q4/Q5 subgraphs and extremes", 0.0, two_path_identity},
      {7, "k=1 lifting: C6-free H_v triangle-free, triangles lift to C6", 0.0, odd_cycle_lifting},
      {8, "edge bound formula values, asymptote and residual", 0.0, bound_formula},
      {9, "Q3 counts match naive oracle; thread invariance", 0.0, enumeration_oracle},
  };

  const auto first = run_all(criteria, 0);
  const auto second = run_all(criteria, 2);

  int failures = 0;
  bool identical = true;
  std::string mismatched;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const Result& r = first[i];
    bool pass = r.outcome.pass && second[i].outcome.pass;
    std::string detail = r.outcome.detail.empty() ? second[i].outcome.detail : r.outcome.detail;
    if (c.time_limit_s > 0 && r.seconds > c.time_limit_s) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (qcube::report::dump(r.outcome.evidence) != qcube::report::dump(second[i].outcome.evidence)) {
      identical = false;
      mismatched += (mismatched.empty() ? "" : ",") + std::to_string(c.id);
    }
    failures += !pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title;
    std::cout << " (" << static_cast<long long>(r.seconds * 1000.0) << " ms)";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  failures += !identical;
  std::cout << (identical ? "[PASS] " : "[FAIL] ") << "10. criteria 1-9 evidence byte-identical across two runs";
  if (!identical) std::cout << " -- differs for " << mismatched;
  std::cout << "\n";

  if (std::getenv("QCUBE_ACCEPTANCE_EVIDENCE")) {
    Json all = Json::array();
    for (std::size_t i = 0; i < criteria.size(); ++i) all.push_back({{"criterion", criteria[i].id}, {"evidence", first[i].outcome.evidence}});
    std::cout << qcube::report::dump(all);
  }
  std::cout << (failures == 0 ? "all criteria passed\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
