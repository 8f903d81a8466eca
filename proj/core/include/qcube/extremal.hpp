#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcube/hypercube.hpp"

namespace qcube {

/// Auxiliary graph on the n Q_n-neighbours of a center v: {u, w} is an
/// edge when G holds a 2-path u-x-w with x != v.
struct HvGraph {
  struct HvEdge {
    int u = 0;  // index into vertices, u < w
    int w = 0;
    Vertex midpoint;
  };

  Vertex center;
  /// vertices[i] is the center with position i+1 flipped.
  std::vector<Vertex> vertices;
  std::vector<HvEdge> edges;
  /// adjacency[i] has bit j set when {i, j} is an edge.
  std::vector<std::uint32_t> adjacency;
};

/// Throws std::logic_error if a pair of neighbours does not have exactly
/// one common Q_n-neighbour besides the center.
HvGraph build_hv(const Subgraph& g, const Vertex& v);

/// Number of paths of length two: sum over v of binom(deg v, 2).
std::uint64_t path2_count(const Subgraph& g);

struct IdentityCheck {
  std::uint64_t path_count = 0;
  std::uint64_t hv_edge_total = 0;
  [[nodiscard]] bool holds() const noexcept { return path_count == hv_edge_total; }
};

IdentityCheck verify_identity(const Subgraph& g);

/// Default dimension limit for odd_cycle_lift_check without `force`.
inline constexpr int kLiftGuard = 4;

struct LiftWitness {
  Vertex center;
  std::vector<Vertex> hv_cycle;
  Cycle lifted;
};

struct LiftReport {
  int n = 0;
  int k = 0;
  std::uint64_t centers_with_odd_cycle = 0;
  std::uint64_t odd_cycles = 0;
  std::uint64_t lifts_verified = 0;
  std::uint64_t lifts_failed = 0;
  std::optional<LiftWitness> first_witness;

  [[nodiscard]] bool sound() const noexcept { return lifts_failed == 0 && lifts_verified == odd_cycles; }
};

/// Every C_{2k+1} in some H_v is lifted through its unique midpoints to a
/// closed walk of length 4k+2 in G, which must be a cycle of G.
LiftReport odd_cycle_lift_check(const Subgraph& g, int k, bool force = false);

/// Canonical (2k+1)-cycles of a small graph given by adjacency masks.
std::vector<std::vector<int>> odd_cycles(const std::vector<std::uint32_t>& adjacency, int length);

struct EdgeCapCheck {
  /// G is C_{4k+2}-free (brute force); otherwise the check is exempt.
  bool premise_holds = false;
  bool cap_holds = false;
  std::uint64_t max_hv_edges = 0;
  double cap = 0.0;  // n^2 / 4
};

/// |E(H_v)| <= n^2/4 for all v, asserted only when G is C_{4k+2}-free.
/// Throws GuardError when the premise cannot be checked at this n.
EdgeCapCheck hv_edge_cap_check(const Subgraph& g, int k, bool force = false);

struct BoundFormula {
  int n = 0;
  /// E_max / (n 2^(n-1)) = (1 + sqrt(1 + 2n^2)) / (2n)
  double ratio = 0.0;
  /// 1/(2n) + sqrt(2 + 1/n^2)/2 as printed; numerically equals ratio.
  double printed_a_bound = 0.0;
  /// 2^(n-2) (1 + sqrt(1 + 2n^2)); absent past n = 40.
  std::optional<double> e_max;
  double log2_e_max = 0.0;
  /// |lhs - rhs| / rhs of 2^(-n-1) (2E)^2 - E = 2^n n^2 / 4 at E = E_max.
  double relative_residual = 0.0;
};

inline constexpr int kExactPowerLimit = 40;

BoundFormula upper_bound_edges(int n);

struct BoundReport {
  int n = 0;
  std::uint64_t edges = 0;
  std::uint64_t path2 = 0;
  std::uint64_t hv_edges = 0;
  /// 2^n n^2 / 4
  double rhs = 0.0;
  /// 2^(-n-1) (2|E|)^2 - |E|, a lower bound on path2
  double cauchy_schwarz_lower = 0.0;
  BoundFormula formula;
};

BoundReport bound_report(const Subgraph& g);

/// Independent retention of each edge with probability p, edges visited
/// in ascending order, uniform draws from mt19937_64(seed).
Subgraph random_subgraph(int n, double p, std::uint64_t seed);

struct CycleFreeSample {
  Subgraph graph;
  int rejections = 0;
  bool fallback = false;
  std::uint64_t removed_edges = 0;
};

/// Rejection-samples a C_length-free subgraph; after `max_rejections`
/// failed draws, greedily deletes the first edge of the smallest witness
/// from the last draw until none remains.
CycleFreeSample sample_cycle_free(int n, int length, double p, std::uint64_t seed, int max_rejections = 1000);

}  // namespace qcube
