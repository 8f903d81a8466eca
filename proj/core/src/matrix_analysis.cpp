#include "qcube/matrix_analysis.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "qcube/coloring.hpp"
#include "qcube/cycle_search.hpp"
#include "qcube/parallel.hpp"

namespace qcube {

namespace {

constexpr int kScanRows = 5;
constexpr int kScanCols = 5;
constexpr std::uint32_t kScanRowMask = (1u << kScanCols) - 1;

std::uint32_t column_bit(int cols, int c) noexcept { return std::uint32_t{1} << (cols - 1 - c); }

/// Ordered pairs (i, i±1 mod r), deduplicated for r = 2.
std::vector<std::pair<int, int>> consecutive_pairs(int r) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < r; ++i) {
    out.emplace_back(i, (i + 1) % r);
    if (r > 2) out.emplace_back(i, (i + r - 1) % r);
  }
  return out;
}

}  // namespace

BitMatrix::BitMatrix(int cols, std::vector<std::uint32_t> rows) : cols_(cols), rows_(std::move(rows)) {
  if (cols < 0 || cols > 32) throw std::invalid_argument("matrix must have 0..32 columns");
  const std::uint32_t limit = cols == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << cols) - 1;
  for (std::uint32_t r : rows_) {
    if ((r & ~limit) != 0) throw std::invalid_argument("matrix row wider than column count");
  }
}

BitMatrix BitMatrix::parse(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix(0, {});
  const int cols = static_cast<int>(rows.front().size());
  std::vector<std::uint32_t> words;
  for (const std::string& row : rows) {
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix rows");
    std::uint32_t w = 0;
    for (char ch : row) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("matrix entries must be 0 or 1");
      w = (w << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    words.push_back(w);
  }
  return BitMatrix(cols, std::move(words));
}

BitMatrix BitMatrix::parse(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy;
  for (std::string_view r : rows) copy.emplace_back(r);
  return parse(copy);
}

bool BitMatrix::at(int r, int c) const {
  if (c < 0 || c >= cols_) throw std::out_of_range("matrix column out of range");
  return (row(r) & column_bit(cols_, c)) != 0;
}

BitMatrix BitMatrix::column_reversed() const {
  std::vector<std::uint32_t> out;
  out.reserve(rows_.size());
  for (std::uint32_t r : rows_) out.push_back(reverse_bits(r, cols_));
  return BitMatrix(cols_, std::move(out));
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  for (std::uint32_t r : rows_) out.push_back(cols_ == 0 ? std::string() : word_to_string(r, cols_));
  return out;
}

LayerSplit split_layers(const Cycle& cycle) {
  const auto words = cycle.words();
  const int w0 = std::popcount(words[0]);
  const int w1 = std::popcount(words[1]);
  if (std::abs(w0 - w1) != 1) throw std::invalid_argument("cycle is not layer-alternating");
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (std::popcount(words[i]) != (i % 2 == 0 ? w0 : w1)) {
      throw std::invalid_argument("cycle is not layer-alternating");
    }
  }
  const std::size_t offset = w0 < w1 ? 0 : 1;
  LayerSplit split;
  split.layer = std::min(w0, w1);
  for (std::size_t i = 0; i < words.size(); i += 2) {
    split.lower.push_back(words[(i + offset) % words.size()]);
    split.upper.push_back(words[(i + offset + 1) % words.size()]);
  }
  return split;
}

PositionSet positions_of_change(const Cycle& cycle) {
  const LayerSplit split = split_layers(cycle);
  const int n = cycle.dimension();
  std::uint32_t changed = 0;
  const std::size_t r = split.lower.size();
  for (std::size_t i = 0; i < r; ++i) changed |= split.lower[i] ^ split.lower[(i + 1) % r];
  PositionSet out;
  for (int pos = 1; pos <= n; ++pos) {
    if (changed & position_mask(n, pos)) out.positions.push_back(pos);
  }
  return out;
}

AMatrix build_matrix(const Cycle& cycle) {
  const LayerSplit split = split_layers(cycle);
  PositionSet positions = positions_of_change(cycle);
  std::vector<std::uint32_t> rows;
  rows.reserve(split.lower.size());
  for (std::uint32_t x : split.lower) rows.push_back(restrict_bits(x, cycle.dimension(), positions.positions));
  return AMatrix{BitMatrix(positions.size(), std::move(rows)), std::move(positions)};
}

bool has_bad_prefixes(const BitMatrix& a) {
  const int r = a.rows();
  const int m = a.cols();
  if (r < 2 || m < 2) return false;
  const auto pairs = consecutive_pairs(r);

  for (int t = 1; t < m; ++t) {
    const std::uint32_t t_bit = column_bit(m, t);
    const std::uint32_t before_t = ((std::uint32_t{1} << t) - 1) << (m - t);
    for (int s = 0; s < t; ++s) {
      const std::uint32_t s_bit = column_bit(m, s);
      const std::uint32_t agree = before_t & ~s_bit;
      auto pattern = [&](std::uint32_t row) { return ((row & s_bit) ? 2 : 0) | ((row & t_bit) ? 1 : 0); };

      for (const auto& [i, i2] : pairs) {
        const std::uint32_t ri = a.row(i);
        const std::uint32_t ri2 = a.row(i2);
        if (pattern(ri) != 0b00 || pattern(ri2) != 0b01 || ((ri ^ ri2) & agree) != 0) continue;
        for (const auto& [j, j2] : pairs) {
          const std::uint32_t rj = a.row(j);
          const std::uint32_t rj2 = a.row(j2);
          if (((rj ^ ri) & agree) != 0 || ((rj2 ^ ri) & agree) != 0) continue;
          if (pattern(rj2) != 0b10) continue;
          if (pattern(rj) == 0b01 || pattern(rj) == 0b11) return true;
        }
      }
    }
  }
  return false;
}

bool chord_pattern(const BitMatrix& a) {
  const int m = a.cols();
  for (int c1 = 0; c1 < m; ++c1) {
    for (int c2 = c1 + 1; c2 < m; ++c2) {
      const std::uint32_t both = column_bit(m, c1) | column_bit(m, c2);
      int zero_rows = 0;
      for (int r = 0; r < a.rows(); ++r) {
        if ((a.row(r) & both) == 0) ++zero_rows;
      }
      if (zero_rows >= 3) return true;
    }
  }
  return false;
}

bool column_consecutive_ones(const BitMatrix& a) {
  const int r = a.rows();
  for (int c = 0; c < a.cols(); ++c) {
    int rises = 0;
    for (int i = 0; i < r; ++i) {
      if (!a.at(i, c) && a.at((i + 1) % r, c)) ++rises;
    }
    if (rises > 1) return false;
  }
  return true;
}

std::optional<ScanFilter> scan_filter_from_letter(char letter) noexcept {
  if (letter < 'a' || letter > 'g') return std::nullopt;
  return static_cast<ScanFilter>(letter - 'a');
}

BitMatrix scan_matrix(std::uint32_t index) {
  std::vector<std::uint32_t> rows(kScanRows);
  for (int i = 0; i < kScanRows; ++i) rows[static_cast<std::size_t>(i)] = (index >> (kScanCols * i)) & kScanRowMask;
  return BitMatrix(kScanCols, std::move(rows));
}

namespace {

struct ScanState {
  std::array<std::uint64_t, kScanFilterCount> after{};
  std::optional<std::uint32_t> first_survivor;
};

bool passes(ScanFilter f, const std::array<std::uint32_t, kScanRows>& rows, std::uint32_t index) {
  switch (f) {
    case ScanFilter::RowWeightTwo:
      return std::all_of(rows.begin(), rows.end(), [](std::uint32_t r) { return std::popcount(r) == 2; });
    case ScanFilter::RowsDistinct:
      for (int i = 0; i < kScanRows; ++i) {
        for (int j = i + 1; j < kScanRows; ++j) {
          if (rows[static_cast<std::size_t>(i)] == rows[static_cast<std::size_t>(j)]) return false;
        }
      }
      return true;
    case ScanFilter::ConsecutiveDistance:
      for (int i = 0; i < kScanRows; ++i) {
        if (std::popcount(rows[static_cast<std::size_t>(i)] ^ rows[static_cast<std::size_t>((i + 1) % kScanRows)]) != 2) {
          return false;
        }
      }
      return true;
    case ScanFilter::UnionRowsDistinct: {
      std::array<std::uint32_t, kScanRows> unions{};
      for (int i = 0; i < kScanRows; ++i) {
        unions[static_cast<std::size_t>(i)] =
            rows[static_cast<std::size_t>(i)] | rows[static_cast<std::size_t>((i + 1) % kScanRows)];
      }
      std::sort(unions.begin(), unions.end());
      return std::adjacent_find(unions.begin(), unions.end()) == unions.end();
    }
    case ScanFilter::ColumnIntervals:
      return column_consecutive_ones(scan_matrix(index));
    case ScanFilter::NoChordPattern:
      return !chord_pattern(scan_matrix(index));
    case ScanFilter::NoBadPrefixes:
      return !has_bad_prefixes_either(scan_matrix(index));
  }
  return true;
}

}  // namespace

ScanCensus exhaustive_case_scan(const ScanOptions& options) {
  constexpr std::uint64_t total = std::uint64_t{1} << (kScanRows * kScanCols);
  std::array<bool, kScanFilterCount> active{};
  for (int f = 0; f < kScanFilterCount; ++f) active[static_cast<std::size_t>(f)] = !options.dropped.contains(static_cast<ScanFilter>(f));

  auto states = parallel_chunks<ScanState>(
      0, total, std::uint64_t{1} << 16, options.threads, [&](ScanState& state, std::uint64_t lo, std::uint64_t hi) {
        std::array<std::uint32_t, kScanRows> rows{};
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          const auto index = static_cast<std::uint32_t>(idx);
          for (int i = 0; i < kScanRows; ++i) rows[static_cast<std::size_t>(i)] = (index >> (kScanCols * i)) & kScanRowMask;
          int f = 0;
          for (; f < kScanFilterCount; ++f) {
            if (active[static_cast<std::size_t>(f)] && !passes(static_cast<ScanFilter>(f), rows, index)) break;
            ++state.after[static_cast<std::size_t>(f)];
          }
          if (f == kScanFilterCount && (!state.first_survivor || index < *state.first_survivor)) {
            state.first_survivor = index;
          }
        }
      });

  ScanCensus census;
  census.total = total;
  census.dropped = options.dropped;
  for (const ScanState& s : states) {
    for (int f = 0; f < kScanFilterCount; ++f) census.after[static_cast<std::size_t>(f)] += s.after[static_cast<std::size_t>(f)];
    if (s.first_survivor && (!census.first_survivor || *s.first_survivor < *census.first_survivor)) {
      census.first_survivor = s.first_survivor;
    }
  }
  census.survivors = census.after.back();
  return census;
}

bool is_paper4_monochromatic(const Cycle& cycle) {
  const auto edges = cycle.edges();
  const ColorId first = paper_color(edges.front());
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return paper_color(e) == first; });
}

LayerCycleAudit audit_layer_cycles(int n, int length) {
  check_search_bounds(n, length, false);
  LayerCycleAudit audit;
  audit.n = n;
  audit.length = length;
  audit.position_set_sizes.assign(static_cast<std::size_t>(n) + 1, 0);

  for (int k = 0; k < n; ++k) {
    SearchQuery q;
    q.n = n;
    q.length = length;
    q.layer = k;
    visit_cycles(q, [&](const Cycle& c) {
      ++audit.cycles;
      const bool induced = c.is_induced();
      if (induced) ++audit.induced;
      const AMatrix a = build_matrix(c);
      ++audit.position_set_sizes[static_cast<std::size_t>(a.positions.size())];

      const BitMatrix& rows = a.rows;
      bool ok = true;
      const int weight = std::popcount(rows.row(0));
      for (int i = 0; i < rows.rows(); ++i) {
        if (std::popcount(rows.row(i)) != weight) ok = false;
        if (std::popcount(rows.row(i) ^ rows.row((i + 1) % rows.rows())) != 2) ok = false;
        for (int j = i + 1; j < rows.rows(); ++j) {
          if (rows.row(i) == rows.row(j)) ok = false;
        }
      }
      if (!ok) ++audit.matrix_invariant_failures;
      if (!column_consecutive_ones(rows)) ++audit.column_interval_failures;

      const bool mono = is_paper4_monochromatic(c);
      if (mono) ++audit.monochromatic;
      if (induced && has_bad_prefixes_either(rows)) {
        ++audit.induced_with_bad_prefixes;
        if (mono) ++audit.bad_prefix_counterexamples;
      }
      if (chord_pattern(rows)) {
        ++audit.with_chord_pattern;
        // The zero block only forces a chord when every row has two 1s.
        if (weight != 2) {
          ++audit.chord_pattern_outside_premise;
        } else if (induced) {
          ++audit.chord_pattern_counterexamples;
        }
      }
    });
  }
  return audit;
}

}  // namespace qcube
