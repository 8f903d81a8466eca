#include "qcube/cycle_search.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <string>

#include "qcube/parallel.hpp"

namespace qcube {

namespace {

/// Allowed flip bits per vertex after all edge filters are applied.
std::vector<std::uint32_t> neighbour_masks(const SearchQuery& q) {
  const int n = q.n;
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::uint32_t> masks(count, 0);
  for (std::uint32_t low = 0; low < count; ++low) {
    if (q.layer && std::popcount(low) != *q.layer) continue;
    for (int pos = 1; pos <= n; ++pos) {
      const std::uint32_t bit = position_mask(n, pos);
      if (low & bit) continue;
      if (q.coloring && q.coloring->color_of(low, pos) != *q.color) continue;
      if (q.subgraph && !q.subgraph->contains(low, low | bit)) continue;
      masks[low] |= bit;
      masks[low | bit] |= bit;
    }
  }
  return masks;
}

struct WorkerState {
  std::uint64_t count = 0;
  std::uint64_t work = 0;
  std::vector<std::uint32_t> best;
};

/// Depth-first enumeration of cycles whose smallest vertex is the start
/// and whose second vertex is smaller than its last: one representative
/// per cycle, already in canonical form.
class CycleWalker {
 public:
  CycleWalker(const std::vector<std::uint32_t>& masks, int length, bool induced, bool prune_chords,
              const std::function<void(const std::vector<std::uint32_t>&)>* on_cycle = nullptr)
      : on_cycle_(on_cycle), masks_(masks), length_(length), induced_(induced), prune_(induced && prune_chords),
        on_path_(masks.size(), 0), path_(static_cast<std::size_t>(length), 0) {}

  void run(std::uint32_t start, WorkerState& state) {
    if (masks_[start] == 0) return;
    state_ = &state;
    path_[0] = start;
    on_path_[start] = 1;
    extend(1);
    on_path_[start] = 0;
  }

 private:
  void extend(int depth) {
    const std::uint32_t start = path_[0];
    const std::uint32_t current = path_[static_cast<std::size_t>(depth - 1)];
    if (depth == length_) {
      close();
      return;
    }
    const int remaining = length_ - depth;
    std::uint32_t flips = masks_[current];
    while (flips) {
      const std::uint32_t bit = flips & (~flips + 1);
      flips ^= bit;
      const std::uint32_t next = current ^ bit;
      if (next <= start || on_path_[next]) continue;
      if (std::popcount(next ^ start) > remaining) continue;
      if (prune_ && makes_chord(next, depth)) continue;
      ++state_->work;
      path_[static_cast<std::size_t>(depth)] = next;
      on_path_[next] = 1;
      extend(depth + 1);
      on_path_[next] = 0;
    }
  }

  // A vertex placed at index `depth` may only touch its path predecessor,
  // plus the start when it is the last vertex.
  bool makes_chord(std::uint32_t next, int depth) const noexcept {
    for (int j = 0; j + 1 < depth; ++j) {
      if (j == 0 && depth == length_ - 1) continue;
      if (std::popcount(next ^ path_[static_cast<std::size_t>(j)]) == 1) return true;
    }
    return false;
  }

  void close() {
    const std::uint32_t start = path_[0];
    const std::uint32_t last = path_.back();
    if ((masks_[last] & (start ^ last)) == 0) return;
    if (path_[1] > last) return;
    if (induced_ && !prune_ && has_chord(path_)) return;
    ++state_->count;
    if (state_->best.empty() || path_ < state_->best) state_->best = path_;
    if (on_cycle_) (*on_cycle_)(path_);
  }

  const std::function<void(const std::vector<std::uint32_t>&)>* on_cycle_;
  const std::vector<std::uint32_t>& masks_;
  int length_;
  bool induced_;
  bool prune_;
  std::vector<std::uint8_t> on_path_;
  std::vector<std::uint32_t> path_;
  WorkerState* state_ = nullptr;
};

struct RawResult {
  std::uint64_t count = 0;
  std::uint64_t work = 0;
  std::vector<std::uint32_t> best;
};

RawResult run_search(const std::vector<std::uint32_t>& masks, int length, bool induced, bool prune_chords,
                     unsigned threads) {
  const std::uint64_t vertices = masks.size();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, vertices / 256);
  auto states = parallel_chunks<WorkerState>(
      0, vertices, chunk, threads, [&](WorkerState& state, std::uint64_t lo, std::uint64_t hi) {
        CycleWalker walker(masks, length, induced, prune_chords);
        for (std::uint64_t s = lo; s < hi; ++s) walker.run(static_cast<std::uint32_t>(s), state);
      });
  RawResult out;
  for (const WorkerState& s : states) {
    out.count += s.count;
    out.work += s.work;
    if (!s.best.empty() && (out.best.empty() || s.best < out.best)) out.best = s.best;
  }
  return out;
}

void merge_witness(std::optional<Cycle>& into, int n, const std::vector<std::uint32_t>& candidate) {
  if (candidate.empty()) return;
  if (!into || std::lexicographical_compare(candidate.begin(), candidate.end(), into->words().begin(),
                                            into->words().end())) {
    into = Cycle(n, candidate);
  }
}

void validate_query(const SearchQuery& q) {
  check_dimension(q.n);
  check_search_bounds(q.n, q.length, q.force);
  if (q.layer && (*q.layer < 0 || *q.layer >= q.n)) {
    throw std::invalid_argument("layer must be in 0..n-1");
  }
  if (static_cast<bool>(q.coloring) != q.color.has_value()) {
    throw std::invalid_argument("a color filter needs both a coloring and a color");
  }
  if (q.coloring) {
    if (q.coloring->dimension() != q.n) throw std::invalid_argument("coloring dimension does not match query");
    if (*q.color < 0 || *q.color >= q.coloring->palette()) throw std::invalid_argument("color outside palette");
  }
  if (q.subgraph && q.subgraph->dimension() != q.n) {
    throw std::invalid_argument("subgraph dimension does not match query");
  }
}

}  // namespace

int enumeration_guard(int length) noexcept { return length <= 6 ? 10 : 8; }

void check_search_bounds(int n, int length, bool force) {
  if (length < 4 || length % 2 != 0) {
    throw std::invalid_argument("cycle length must be even and at least 4, got " + std::to_string(length));
  }
  if (n > 20) throw GuardError("cycle search is limited to n <= 20");
  if (!force && n > enumeration_guard(length)) {
    throw GuardError("n = " + std::to_string(n) + " exceeds the enumeration guard n <= " +
                     std::to_string(enumeration_guard(length)) + " for length " + std::to_string(length) +
                     " (use force to override)");
  }
}

SearchReport enumerate_cycles(const SearchQuery& query) {
  validate_query(query);
  const auto masks = neighbour_masks(query);
  const RawResult raw = run_search(masks, query.length, query.induced, query.prune_chords, query.threads);
  SearchReport report;
  report.query = query;
  report.count = raw.count;
  report.work_units = raw.work;
  merge_witness(report.witness, query.n, raw.best);
  return report;
}

std::uint64_t visit_cycles(const SearchQuery& query, const CycleVisitor& visit) {
  validate_query(query);
  const auto masks = neighbour_masks(query);
  const std::function<void(const std::vector<std::uint32_t>&)> forward = [&](const std::vector<std::uint32_t>& p) {
    visit(Cycle(query.n, p));
  };
  WorkerState state;
  CycleWalker walker(masks, query.length, query.induced, query.prune_chords, &forward);
  for (std::uint32_t s = 0; s < masks.size(); ++s) walker.run(s, state);
  return state.count;
}

bool colors_separate_layers(const Coloring& coloring) {
  if (coloring.kind() != ColoringKind::Table) return true;
  const int n = coloring.dimension();
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < count; ++v) {
    std::bitset<256> down, up;
    for (int pos = 1; pos <= n; ++pos) {
      const std::uint32_t bit = position_mask(n, pos);
      if (v & bit) {
        down.set(static_cast<std::size_t>(coloring.color_of(v ^ bit, pos)));
      } else {
        up.set(static_cast<std::size_t>(coloring.color_of(v, pos)));
      }
    }
    if ((down & up).any()) return false;
  }
  return true;
}

MonoSearchResult find_mono_cycle(const Coloring& coloring, int length, bool induced,
                                 const MonoSearchOptions& options) {
  const int n = coloring.dimension();
  check_search_bounds(n, length, options.force);

  MonoSearchResult result;
  result.length = length;
  result.induced = induced;
  result.classes_searched = coloring.palette();
  result.layer_restricted = options.restrict_to_layers && colors_separate_layers(coloring);

  auto shared = std::make_shared<const Coloring>(coloring);
  for (int color = 0; color < coloring.palette(); ++color) {
    SearchQuery q;
    q.n = n;
    q.length = length;
    q.induced = induced;
    q.coloring = shared;
    q.color = color;
    q.force = options.force;
    q.prune_chords = options.prune_chords;
    q.threads = options.threads;

    std::vector<std::optional<int>> layers;
    if (result.layer_restricted) {
      for (int k = 0; k < n; ++k) layers.emplace_back(k);
    } else {
      layers.emplace_back(std::nullopt);
    }
    for (const auto& layer : layers) {
      q.layer = layer;
      const auto masks = neighbour_masks(q);
      if (std::all_of(masks.begin(), masks.end(), [](std::uint32_t m) { return m == 0; })) continue;
      const RawResult raw = run_search(masks, length, induced, options.prune_chords, options.threads);
      result.mono_cycles += raw.count;
      result.work_units += raw.work;
      merge_witness(result.witness, n, raw.best);
    }
  }
  return result;
}

Theorem1Report verify_theorem1(int n, const MonoSearchOptions& options) {
  const Coloring coloring = Coloring::paper4(n);
  check_search_bounds(n, 10, options.force);
  Theorem1Report report;
  report.n = n;
  report.passed = true;
  for (int length : {4, 6, 10}) {
    report.results.push_back(find_mono_cycle(coloring, length, true, options));
    if (report.results.back().witness) report.passed = false;
  }
  return report;
}

}  // namespace qcube
