#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qcube/coloring.hpp"
#include "qcube/hypercube.hpp"

namespace qcube {

/// Largest n that cycle enumeration accepts for `length` without `force`.
int enumeration_guard(int length) noexcept;

/// Throws std::invalid_argument for odd or short lengths and GuardError
/// when n exceeds the guard and `force` is not set.
void check_search_bounds(int n, int length, bool force);

struct SearchQuery {
  int n = 0;
  int length = 4;
  bool induced = false;
  /// Restrict to edge layer k (vertices of weight k and k+1).
  std::optional<int> layer;
  /// Restrict to edges of `color` under `coloring`; both or neither.
  std::shared_ptr<const Coloring> coloring;
  std::optional<int> color;
  std::shared_ptr<const Subgraph> subgraph;
  bool force = false;
  /// Reject chords while extending instead of at closure. Counts are identical.
  bool prune_chords = true;
  unsigned threads = 0;
};

struct SearchReport {
  SearchQuery query;
  /// Cycles counted once each, up to rotation and reflection.
  std::uint64_t count = 0;
  /// Canonically smallest cycle found.
  std::optional<Cycle> witness;
  /// DFS extensions performed; independent of thread count.
  std::uint64_t work_units = 0;
};

SearchReport enumerate_cycles(const SearchQuery& query);

using CycleVisitor = std::function<void(const Cycle&)>;

/// Single-threaded walk calling `visit` once per counted cycle, in canonical
/// form and a deterministic order. Returns the count.
std::uint64_t visit_cycles(const SearchQuery& query, const CycleVisitor& visit);

struct MonoSearchOptions {
  bool force = false;
  /// Search each color class one edge layer at a time. Only honored when
  /// the coloring separates layers (see colors_separate_layers).
  bool restrict_to_layers = true;
  bool prune_chords = true;
  unsigned threads = 0;
};

struct MonoSearchResult {
  int length = 0;
  bool induced = false;
  int classes_searched = 0;
  bool layer_restricted = false;
  std::uint64_t mono_cycles = 0;
  std::optional<Cycle> witness;
  std::uint64_t work_units = 0;
};

/// True when no vertex sees the same color on an edge going down and an
/// edge going up; every monochromatic cycle then lies inside one edge layer.
bool colors_separate_layers(const Coloring& coloring);

MonoSearchResult find_mono_cycle(const Coloring& coloring, int length, bool induced,
                                 const MonoSearchOptions& options = {});

struct Theorem1Report {
  int n = 0;
  std::vector<MonoSearchResult> results;
  bool passed = false;
};

/// No induced monochromatic C_4, C_6 or C_10 under the 4-coloring of Q_n.
Theorem1Report verify_theorem1(int n, const MonoSearchOptions& options = {});

}  // namespace qcube
