#include "qcube/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <ostream>
#include <sstream>

#include "qcube/coloring.hpp"
#include "qcube/cycle_search.hpp"
#include "qcube/extremal.hpp"
#include "qcube/hypercube.hpp"
#include "qcube/matrix_analysis.hpp"
#include "qcube/report_json.hpp"
#include "qcube/version.hpp"

namespace qcube::cli {

namespace {

using report::Json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  unsigned threads = 0;
  bool verbose = false;
  bool force = false;
};

struct VerifyArgs {
  int n = 0;
  std::string coloring = "paper4";
  std::vector<int> lengths{4, 6, 10};
  bool induced = false;
  bool no_layer_restrict = false;
};

struct EnumerateArgs {
  int n = 0;
  int length = 0;
  bool induced = false;
  std::optional<int> layer;
  std::string coloring;
  std::optional<int> color;
  std::string subgraph;
  bool lazy_chords = false;
};

struct ColorArgs {
  int n = 0;
  std::string coloring = "paper4";
  std::string save;
  std::vector<std::string> edges;
};

struct ScanArgs {
  std::vector<std::string> drop;
};

struct BoundsArgs {
  int n = 0;
  std::string subgraph;
  std::string random;
  std::optional<int> k;
};

struct StatsArgs {
  int n = 0;
  std::string vertex;
  std::vector<int> positions;
};

std::shared_ptr<const Coloring> make_coloring(const std::string& label, int n) {
  if (label.rfind("file:", 0) == 0) {
    auto c = std::make_shared<const Coloring>(load_coloring(label.substr(5)));
    if (c->dimension() != n) {
      throw UsageError("coloring file has n=" + std::to_string(c->dimension()) + " but --n is " + std::to_string(n));
    }
    return c;
  }
  if (label == "paper4" || label == "layer2" || label == "paper4-reversed") {
    return std::make_shared<const Coloring>(Coloring::named(label, n));
  }
  throw UsageError("unknown coloring '" + label + "' (expected paper4, layer2, paper4-reversed or file:PATH)");
}

void warn_if_forced(int n, int length, const Common& common, std::ostream& err) {
  if (common.force && n > enumeration_guard(length)) {
    err << "warning: n = " << n << " exceeds the default guard n <= " << enumeration_guard(length)
        << " for length " << length << "; continuing because of --force\n";
  }
}

int run_verify(const VerifyArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  check_dimension(a.n);
  if (a.lengths.empty()) throw UsageError("--lengths must not be empty");
  for (int length : a.lengths) {
    if (length < 4 || length % 2 != 0) {
      throw UsageError("cycle length " + std::to_string(length) + " is not even and at least 4");
    }
  }
  for (int length : a.lengths) check_search_bounds(a.n, length, common.force);
  const auto coloring = make_coloring(a.coloring, a.n);

  MonoSearchOptions options;
  options.force = common.force;
  options.threads = common.threads;
  options.restrict_to_layers = !a.no_layer_restrict;

  Json j = report::header();
  j["n"] = a.n;
  j["coloring"] = a.coloring;
  j["palette"] = coloring->palette();
  j["induced"] = a.induced;
  j["guard"] = {{"max_n_short", enumeration_guard(6)}, {"max_n_long", enumeration_guard(10)}, {"force", common.force}};
  Json results = Json::array();
  bool witness = false;
  for (int length : a.lengths) {
    warn_if_forced(a.n, length, common, err);
    if (common.verbose) err << "searching monochromatic C_" << length << " in Q_" << a.n << "\n";
    const MonoSearchResult r = find_mono_cycle(*coloring, length, a.induced, options);
    if (r.witness) witness = true;
    results.push_back(report::mono_result_json(r));
  }
  j["results"] = results;
  j["witness_found"] = witness;
  out << report::dump(j);
  return witness ? kWitnessFound : kSuccess;
}

int run_enumerate(const EnumerateArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  check_dimension(a.n);
  SearchQuery q;
  q.n = a.n;
  q.length = a.length;
  q.induced = a.induced;
  q.layer = a.layer;
  q.force = common.force;
  q.threads = common.threads;
  q.prune_chords = !a.lazy_chords;
  check_search_bounds(a.n, a.length, common.force);
  if (a.coloring.empty() != !a.color.has_value()) throw UsageError("--coloring and --color must be given together");
  if (!a.coloring.empty()) {
    q.coloring = make_coloring(a.coloring, a.n);
    q.color = a.color;
  }
  if (!a.subgraph.empty()) {
    q.subgraph = std::make_shared<const Subgraph>(load_subgraph(a.subgraph));
    if (q.subgraph->dimension() != a.n) throw UsageError("subgraph dimension does not match --n");
  }
  warn_if_forced(a.n, a.length, common, err);
  if (common.verbose) err << "enumerating C_" << a.length << " in Q_" << a.n << "\n";
  const SearchReport r = enumerate_cycles(q);
  out << report::dump(report::search_report_json(r, a.coloring, a.subgraph));
  return kSuccess;
}

Edge parse_edge_arg(const std::string& spec, int n) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--edge expects LOW:HIGH, got '" + spec + "'");
  return Edge::between(Vertex::parse(spec.substr(0, colon), n), Vertex::parse(spec.substr(colon + 1), n));
}

int run_color(const ColorArgs& a, std::ostream& out) {
  check_dimension(a.n);
  const auto coloring = make_coloring(a.coloring, a.n);
  std::vector<Edge> edges;
  for (const std::string& spec : a.edges) edges.push_back(parse_edge_arg(spec, a.n));
  const auto sizes = class_sizes(*coloring);

  Json j = report::header();
  j["n"] = a.n;
  j["coloring"] = a.coloring;
  j["palette"] = coloring->palette();
  j["total_edges"] = edge_count(a.n);
  j["class_sizes"] = sizes;
  j["max_class"] = *std::max_element(sizes.begin(), sizes.end());
  j["half_edges"] = edge_count(a.n) / 2.0;
  j["separates_layers"] = colors_separate_layers(*coloring);
  Json listed = Json::array();
  for (const Edge& e : edges) listed.push_back(report::edge_json(e, coloring.get()));
  j["edges"] = listed;
  if (!a.save.empty()) {
    save_coloring(*coloring, a.save);
    j["saved"] = a.save;
  } else {
    j["saved"] = nullptr;
  }
  out << report::dump(j);
  return kSuccess;
}

int run_scan(const ScanArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  ScanOptions options;
  options.threads = common.threads;
  for (const std::string& token : a.drop) {
    for (char ch : token) {
      if (ch == ',') continue;
      const auto f = scan_filter_from_letter(ch);
      if (!f) throw UsageError(std::string("unknown filter '") + ch + "' (expected a..g)");
      options.dropped.insert(*f);
    }
  }
  if (common.verbose) err << "scanning all 2^25 5x5 matrices\n";
  out << report::dump(report::scan_census_json(exhaustive_case_scan(options)));
  return kSuccess;
}

constexpr int kGraphStatsGuard = 16;

struct RandomSpec {
  double p = 0.5;
  std::uint64_t seed = 1;
};

RandomSpec parse_random(const std::string& spec) {
  RandomSpec r;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--random expects p=P,seed=S");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "p") {
        r.p = std::stod(value, &used);
      } else if (key == "seed") {
        r.seed = std::stoull(value, &used);
      } else {
        throw UsageError("unknown --random key '" + key + "'");
      }
      if (used != value.size()) throw UsageError("bad value in --random: '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad value in --random: '" + item + "'");
    }
  }
  if (!(r.p >= 0.0 && r.p <= 1.0)) throw UsageError("--random p must be in [0, 1]");
  return r;
}

int run_bounds(const BoundsArgs& a, const Common& common, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (!a.subgraph.empty() && !a.random.empty()) throw UsageError("--subgraph and --random are exclusive");
  if (a.k && *a.k < 1) throw UsageError("--k must be at least 1");

  Json j = report::header();
  j["n"] = a.n;
  const bool has_source = !a.subgraph.empty() || !a.random.empty();
  if (a.n > kGraphStatsGuard && !(common.force && a.n <= 20)) {
    if (has_source || a.k) {
      throw GuardError("subgraph statistics are limited to n <= " + std::to_string(kGraphStatsGuard) +
                       " (n <= 20 with --force)");
    }
    j["graph"] = nullptr;
    j["formula"] = report::formula_json(upper_bound_edges(a.n));
    out << report::dump(j);
    return kSuccess;
  }

  std::optional<Subgraph> graph;
  Json source;
  if (!a.subgraph.empty()) {
    graph.emplace(load_subgraph(a.subgraph));
    if (graph->dimension() != a.n) throw UsageError("subgraph dimension does not match --n");
    source = {{"kind", "file"}, {"path", a.subgraph}};
  } else if (!a.random.empty()) {
    const RandomSpec r = parse_random(a.random);
    graph.emplace(random_subgraph(a.n, r.p, r.seed));
    source = {{"kind", "random"}, {"p", r.p}, {"seed", r.seed}};
  } else {
    graph.emplace(Subgraph::full(a.n));
    source = {{"kind", "full"}};
  }
  if (a.k) {
    if (!common.force && a.n > kLiftGuard) {
      throw GuardError("--k checks are limited to n <= " + std::to_string(kLiftGuard) + " without --force");
    }
  }
  j["source"] = source;
  j["graph"] = report::bound_report_json(bound_report(*graph));
  j["formula"] = report::formula_json(upper_bound_edges(a.n));
  if (a.k) {
    j["k"] = *a.k;
    j["lift"] = report::lift_report_json(odd_cycle_lift_check(*graph, *a.k, common.force));
    j["cap"] = report::cap_check_json(hv_edge_cap_check(*graph, *a.k, common.force));
  }
  out << report::dump(j);
  return kSuccess;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

int run_stats(const StatsArgs& a, std::ostream& out) {
  check_dimension(a.n);
  Json j = report::header();
  j["n"] = a.n;
  j["vertices"] = vertex_count(a.n);
  j["edges"] = edge_count(a.n);
  Json layers = Json::array();
  std::uint64_t sum = 0;
  for (int k = 0; k < a.n; ++k) {
    const std::uint64_t count = binomial(a.n, k) * static_cast<std::uint64_t>(a.n - k);
    sum += count;
    layers.push_back({{"layer", k}, {"edges", count}});
  }
  j["layers"] = layers;
  j["layer_sum_matches"] = sum == edge_count(a.n);
  if (!a.vertex.empty()) {
    const Vertex v = Vertex::parse(a.vertex, a.n);
    Json vj;
    vj["word"] = v.to_string();
    vj["weight"] = v.weight();
    vj["reverse"] = reverse_vertex(v).to_string();
    if (!a.positions.empty()) {
      vj["positions"] = a.positions;
      vj["restriction"] = restrict(v, a.positions);
    }
    j["vertex"] = vj;
  } else if (!a.positions.empty()) {
    throw UsageError("--positions requires --vertex");
  }
  out << report::dump(j);
  return kSuccess;
}

void add_common(CLI::App* sub, Common& common, bool with_force) {
  sub->add_option("--threads", common.threads, "Worker threads (0 = available parallelism)");
  sub->add_flag("--verbose", common.verbose, "Progress messages on stderr");
  if (with_force) sub->add_flag("--force", common.force, "Override enumeration guards");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qcube: colorings, cycle searches and counting bounds on hypercubes", "qcube"};
  app.set_version_flag("--version", std::string("qcube ") + kVersion);
  app.require_subcommand(1, 1);

  Common common;
  VerifyArgs verify;
  EnumerateArgs enumerate;
  ColorArgs color;
  ScanArgs scan;
  BoundsArgs bounds;
  StatsArgs stats;

  auto* verify_cmd = app.add_subcommand("verify", "Search every color class for monochromatic cycles");
  verify_cmd->add_option("--n", verify.n, "Dimension")->required();
  verify_cmd->add_option("--coloring", verify.coloring, "paper4 | layer2 | paper4-reversed | file:PATH")
      ->capture_default_str();
  verify_cmd->add_option("--lengths", verify.lengths, "Comma-separated even cycle lengths")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_flag("--induced", verify.induced, "Only induced cycles");
  verify_cmd->add_flag("--no-layer-restrict", verify.no_layer_restrict, "Search whole color classes");
  add_common(verify_cmd, common, true);

  auto* enum_cmd = app.add_subcommand("enumerate", "Count cycles of one length");
  enum_cmd->add_option("--n", enumerate.n, "Dimension")->required();
  enum_cmd->add_option("--length", enumerate.length, "Even cycle length")->required();
  enum_cmd->add_flag("--induced", enumerate.induced, "Only induced cycles");
  enum_cmd->add_option("--layer", enumerate.layer, "Restrict to one edge layer");
  enum_cmd->add_option("--coloring", enumerate.coloring, "Restrict to a color class of this coloring");
  enum_cmd->add_option("--color", enumerate.color, "Color id within --coloring");
  enum_cmd->add_option("--subgraph", enumerate.subgraph, "Restrict to a subgraph file");
  enum_cmd->add_flag("--lazy-chords", enumerate.lazy_chords, "Check chords only when a cycle closes");
  add_common(enum_cmd, common, true);

  auto* color_cmd = app.add_subcommand("color", "Class census of a coloring; optionally save it");
  color_cmd->add_option("--n", color.n, "Dimension")->required();
  color_cmd->add_option("--coloring", color.coloring, "paper4 | layer2 | paper4-reversed | file:PATH")
      ->capture_default_str();
  color_cmd->add_option("--save", color.save, "Write the coloring file here");
  color_cmd->add_option("--edge", color.edges, "Describe an edge, LOW:HIGH (repeatable)");
  add_common(color_cmd, common, false);

  auto* scan_cmd = app.add_subcommand("matrix-scan", "Exhaustive 5x5 matrix case scan");
  scan_cmd->add_option("--drop-filter", scan.drop, "Skip filters by letter (a..g)");
  add_common(scan_cmd, common, false);

  auto* bounds_cmd = app.add_subcommand("bounds", "Two-path identity, H_v checks and the edge bound");
  bounds_cmd->add_option("--n", bounds.n, "Dimension")->required();
  bounds_cmd->add_option("--subgraph", bounds.subgraph, "Subgraph file");
  bounds_cmd->add_option("--random", bounds.random, "Random subgraph, p=P,seed=S (defaults p=0.5, seed=1)");
  bounds_cmd->add_option("--k", bounds.k, "Check H_v against C_{2k+1} and G against C_{4k+2}");
  add_common(bounds_cmd, common, true);

  auto* stats_cmd = app.add_subcommand("stats", "Vertex, edge and layer counts; vertex utilities");
  stats_cmd->add_option("--n", stats.n, "Dimension")->required();
  stats_cmd->add_option("--vertex", stats.vertex, "Binary word of length n");
  stats_cmd->add_option("--positions", stats.positions, "Restriction positions, e.g. 2,3,5")->delimiter(',');
  add_common(stats_cmd, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify, common, out, err);
    if (enum_cmd->parsed()) return run_enumerate(enumerate, common, out, err);
    if (color_cmd->parsed()) return run_color(color, out);
    if (scan_cmd->parsed()) return run_scan(scan, common, out, err);
    if (bounds_cmd->parsed()) return run_bounds(bounds, common, out);
    if (stats_cmd->parsed()) return run_stats(stats, out);
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const FormatError& e) {
    err << "bad input file: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace qcube::cli
