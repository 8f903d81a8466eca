#include "qcube/extremal.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qcube/cycle_search.hpp"

namespace qcube {

namespace {

std::uint32_t common_midpoint(std::uint32_t u, std::uint32_t w, std::uint32_t center, int n) {
  std::uint32_t found = 0;
  int count = 0;
  for (int pos = 1; pos <= n; ++pos) {
    const std::uint32_t x = u ^ position_mask(n, pos);
    if (x != center && std::popcount(x ^ w) == 1) {
      found = x;
      ++count;
    }
  }
  if (count != 1) {
    throw std::logic_error("internal error: H_v pair has " + std::to_string(count) + " midpoints besides the center");
  }
  return found;
}

void dfs_odd(const std::vector<std::uint32_t>& adj, int length, std::vector<int>& path, std::uint32_t used,
             std::vector<std::vector<int>>& out) {
  const int start = path.front();
  const int current = path.back();
  if (static_cast<int>(path.size()) == length) {
    if ((adj[static_cast<std::size_t>(current)] >> start) & 1u) {
      if (path[1] < path.back()) out.push_back(path);
    }
    return;
  }
  std::uint32_t next = adj[static_cast<std::size_t>(current)] & ~used;
  while (next) {
    const int j = std::countr_zero(next);
    next &= next - 1;
    if (j <= start) continue;
    path.push_back(j);
    dfs_odd(adj, length, path, used | (1u << j), out);
    path.pop_back();
  }
}

bool has_cycle_of_length(const Subgraph& g, int length, bool force) {
  SearchQuery q;
  q.n = g.dimension();
  q.length = length;
  q.subgraph = std::make_shared<const Subgraph>(g);
  q.force = force;
  q.threads = 1;
  return enumerate_cycles(q).count > 0;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Subgraph draw_subgraph(int n, double p, std::mt19937_64& rng) {
  Subgraph g(n);
  for_each_edge(n, [&](const Edge& e) {
    if (uniform01(rng) < p) g.add(e);
  });
  return g;
}

}  // namespace

HvGraph build_hv(const Subgraph& g, const Vertex& v) {
  const int n = g.dimension();
  if (v.dimension() != n) throw std::invalid_argument("center dimension does not match subgraph");
  HvGraph h{v, {}, {}, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  for (int pos = 1; pos <= n; ++pos) h.vertices.push_back(v.flipped(pos));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint32_t u = h.vertices[static_cast<std::size_t>(i)].bits();
      const std::uint32_t w = h.vertices[static_cast<std::size_t>(j)].bits();
      const std::uint32_t x = common_midpoint(u, w, v.bits(), n);
      if (g.contains(u, x) && g.contains(x, w)) {
        h.edges.push_back({i, j, Vertex(n, x)});
        h.adjacency[static_cast<std::size_t>(i)] |= 1u << j;
        h.adjacency[static_cast<std::size_t>(j)] |= 1u << i;
      }
    }
  }
  return h;
}

std::uint64_t path2_count(const Subgraph& g) {
  std::uint64_t total = 0;
  const std::uint32_t count = std::uint32_t{1} << g.dimension();
  for (std::uint32_t v = 0; v < count; ++v) {
    const std::uint64_t d = static_cast<std::uint64_t>(g.degree(v));
    total += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return total;
}

IdentityCheck verify_identity(const Subgraph& g) {
  IdentityCheck check;
  check.path_count = path2_count(g);
  const int n = g.dimension();
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < count; ++v) check.hv_edge_total += build_hv(g, Vertex(n, v)).edges.size();
  return check;
}

std::vector<std::vector<int>> odd_cycles(const std::vector<std::uint32_t>& adjacency, int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (adjacency.size() > 32) throw std::invalid_argument("at most 32 vertices");
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  for (int s = 0; s < static_cast<int>(adjacency.size()); ++s) {
    path.assign(1, s);
    dfs_odd(adjacency, length, path, 1u << s, out);
  }
  return out;
}

LiftReport odd_cycle_lift_check(const Subgraph& g, int k, bool force) {
  const int n = g.dimension();
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!force && n > kLiftGuard) {
    throw GuardError("odd-cycle lifting is limited to n <= " + std::to_string(kLiftGuard) + " (use force to override)");
  }
  LiftReport report;
  report.n = n;
  report.k = k;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t c = 0; c < count; ++c) {
    const Vertex center(n, c);
    const HvGraph h = build_hv(g, center);
    const auto cycles = odd_cycles(h.adjacency, 2 * k + 1);
    if (!cycles.empty()) ++report.centers_with_odd_cycle;
    for (const auto& hc : cycles) {
      ++report.odd_cycles;
      std::vector<std::uint32_t> walk;
      std::vector<Vertex> hv_cycle;
      for (std::size_t i = 0; i < hc.size(); ++i) {
        const Vertex& u = h.vertices[static_cast<std::size_t>(hc[i])];
        const Vertex& w = h.vertices[static_cast<std::size_t>(hc[(i + 1) % hc.size()])];
        hv_cycle.push_back(u);
        walk.push_back(u.bits());
        walk.push_back(common_midpoint(u.bits(), w.bits(), c, n));
      }
      bool ok = true;
      std::optional<Cycle> lifted;
      try {
        lifted.emplace(n, walk);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      if (ok) {
        for (std::size_t i = 0; i < walk.size(); ++i) {
          if (!g.contains(walk[i], walk[(i + 1) % walk.size()])) ok = false;
        }
      }
      if (ok) {
        ++report.lifts_verified;
        if (!report.first_witness) report.first_witness = LiftWitness{center, hv_cycle, *lifted};
      } else {
        ++report.lifts_failed;
      }
    }
  }
  return report;
}

EdgeCapCheck hv_edge_cap_check(const Subgraph& g, int k, bool force) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = g.dimension();
  const int length = 4 * k + 2;
  if (!force && n > enumeration_guard(length)) {
    throw GuardError("C_" + std::to_string(length) + "-freeness is not verifiable at n = " + std::to_string(n));
  }
  EdgeCapCheck check;
  check.cap = static_cast<double>(n) * n / 4.0;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < count; ++v) {
    check.max_hv_edges = std::max<std::uint64_t>(check.max_hv_edges, build_hv(g, Vertex(n, v)).edges.size());
  }
  check.premise_holds = !has_cycle_of_length(g, length, force);
  check.cap_holds = static_cast<double>(check.max_hv_edges) <= check.cap;
  return check;
}

BoundFormula upper_bound_edges(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  BoundFormula f;
  f.n = n;
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(1.0 + 2.0 * nd * nd);
  const double g = 1.0 + root;
  f.ratio = g / (2.0 * nd);
  f.printed_a_bound = 1.0 / (2.0 * nd) + 0.5 * std::sqrt(2.0 + 1.0 / (nd * nd));
  f.log2_e_max = (nd - 2.0) + std::log2(g);
  if (n <= kExactPowerLimit) {
    const double e = std::ldexp(g, n - 2);
    f.e_max = e;
    const double lhs = std::ldexp(4.0 * e * e, -n - 1) - e;
    const double rhs = std::ldexp(nd * nd, n - 2);
    f.relative_residual = std::abs(lhs - rhs) / rhs;
  } else {
    // Divided through by 2^(n-2): g^2/2 - g = n^2.
    const double rhs = nd * nd;
    f.relative_residual = std::abs(g * g / 2.0 - g - rhs) / rhs;
  }
  return f;
}

BoundReport bound_report(const Subgraph& g) {
  const int n = g.dimension();
  BoundReport r;
  r.n = n;
  r.edges = g.edge_count();
  const IdentityCheck id = verify_identity(g);
  r.path2 = id.path_count;
  r.hv_edges = id.hv_edge_total;
  r.rhs = std::ldexp(static_cast<double>(n) * n, n - 2);
  const double e = static_cast<double>(r.edges);
  r.cauchy_schwarz_lower = std::ldexp(4.0 * e * e, -n - 1) - e;
  r.formula = upper_bound_edges(n);
  return r;
}

Subgraph random_subgraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("retention probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  return draw_subgraph(n, p, rng);
}

CycleFreeSample sample_cycle_free(int n, int length, double p, std::uint64_t seed, int max_rejections) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("retention probability must be in [0, 1]");
  check_search_bounds(n, length, false);
  std::mt19937_64 rng(seed);
  CycleFreeSample sample{Subgraph(n)};
  for (int attempt = 0; attempt < max_rejections; ++attempt) {
    sample.graph = draw_subgraph(n, p, rng);
    if (!has_cycle_of_length(sample.graph, length, false)) return sample;
    ++sample.rejections;
  }
  sample.fallback = true;
  for (;;) {
    SearchQuery q;
    q.n = n;
    q.length = length;
    q.subgraph = std::make_shared<const Subgraph>(sample.graph);
    q.threads = 1;
    const SearchReport found = enumerate_cycles(q);
    if (!found.witness) break;
    sample.graph.remove(Edge::between(found.witness->vertex(0), found.witness->vertex(1)));
    ++sample.removed_edges;
  }
  return sample;
}

}  // namespace qcube
