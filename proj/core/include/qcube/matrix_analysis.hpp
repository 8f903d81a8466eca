#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qcube/hypercube.hpp"

namespace qcube {

/// Small 0/1 matrix (at most 32 columns). Row r is an m-bit word with
/// column 0 in the most significant bit, matching the vertex convention.
class BitMatrix {
 public:
  BitMatrix(int cols, std::vector<std::uint32_t> rows);
  static BitMatrix parse(std::initializer_list<std::string_view> rows);
  static BitMatrix parse(const std::vector<std::string>& rows);

  [[nodiscard]] int rows() const noexcept { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] std::uint32_t row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }
  [[nodiscard]] bool at(int r, int c) const;
  /// Every row written backwards (rows keep their order).
  [[nodiscard]] BitMatrix column_reversed() const;
  [[nodiscard]] std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int cols_;
  std::vector<std::uint32_t> rows_;
};

/// Sorted positions i_1 < ... < i_m.
struct PositionSet {
  std::vector<int> positions;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(positions.size()); }
  friend bool operator==(const PositionSet&, const PositionSet&) = default;
};

/// The lower-layer vertices x_1..x_r of a cycle alternating between
/// weights k and k+1, in cycle order starting from the first lower vertex.
struct LayerSplit {
  int layer = 0;
  std::vector<std::uint32_t> lower;
  std::vector<std::uint32_t> upper;  // upper[i] joins lower[i] and lower[i+1]
};

/// Throws std::invalid_argument if the cycle does not alternate between
/// two adjacent weights.
LayerSplit split_layers(const Cycle& cycle);

/// Positions where some cyclically consecutive lower vertices differ.
PositionSet positions_of_change(const Cycle& cycle);

struct AMatrix {
  BitMatrix rows;
  PositionSet positions;
};

/// Rows x_i restricted to the positions of change, in cycle order.
AMatrix build_matrix(const Cycle& cycle);

/// Two pairs of cyclically consecutive rows (i,i'), (j,j') and columns
/// s < t such that the four rows agree on every column before t except s,
/// with (s,t) bits i:00 i':01 and either j:01 j':10 or j:11 j':10.
bool has_bad_prefixes(const BitMatrix& a);

/// has_bad_prefixes on the matrix or on its column reversal.
inline bool has_bad_prefixes_either(const BitMatrix& a) {
  return has_bad_prefixes(a) || has_bad_prefixes(a.column_reversed());
}

/// Three rows and two columns whose six entries are all zero.
bool chord_pattern(const BitMatrix& a);

/// In every column the rows holding 1 form a cyclic interval.
bool column_consecutive_ones(const BitMatrix& a);

/// Filters of the 5x5 case scan, applied cumulatively in this order.
enum class ScanFilter : int {
  RowWeightTwo = 0,     // (a)
  RowsDistinct,         // (b)
  ConsecutiveDistance,  // (c)
  UnionRowsDistinct,    // (d)
  ColumnIntervals,      // (e)
  NoChordPattern,       // (f)
  NoBadPrefixes,        // (g)
};

inline constexpr int kScanFilterCount = 7;
inline constexpr std::array<char, kScanFilterCount> kScanFilterLetters = {'a', 'b', 'c', 'd', 'e', 'f', 'g'};

std::optional<ScanFilter> scan_filter_from_letter(char letter) noexcept;

struct ScanOptions {
  std::set<ScanFilter> dropped;
  unsigned threads = 0;
};

struct ScanCensus {
  std::uint64_t total = 0;
  /// Matrices remaining after each filter; a dropped filter passes everything.
  std::array<std::uint64_t, kScanFilterCount> after{};
  std::uint64_t survivors = 0;
  std::set<ScanFilter> dropped;
  /// Smallest surviving matrix index, rows packed 5 bits each, row 0 lowest.
  std::optional<std::uint32_t> first_survivor;
};

BitMatrix scan_matrix(std::uint32_t index);

/// All 2^25 5x5 0/1 matrices through filters (a)-(g).
ScanCensus exhaustive_case_scan(const ScanOptions& options = {});

/// Exhaustive audit of every layer-alternating cycle of a given length in
/// Q_n, tying the matrix predicates back to the 4-coloring.
struct LayerCycleAudit {
  int n = 0;
  int length = 0;
  std::uint64_t cycles = 0;
  std::uint64_t induced = 0;
  /// size histogram of the position-of-change set
  std::vector<std::uint64_t> position_set_sizes;
  std::uint64_t matrix_invariant_failures = 0;
  std::uint64_t column_interval_failures = 0;
  std::uint64_t monochromatic = 0;
  std::uint64_t induced_with_bad_prefixes = 0;
  /// induced, bad prefixes and still monochromatic
  std::uint64_t bad_prefix_counterexamples = 0;
  std::uint64_t with_chord_pattern = 0;
  /// chord pattern with rows of weight other than two; not audited
  std::uint64_t chord_pattern_outside_premise = 0;
  /// weight-two rows, chord pattern present, yet the cycle is induced
  std::uint64_t chord_pattern_counterexamples = 0;
};

LayerCycleAudit audit_layer_cycles(int n, int length);

/// Whether every edge of the cycle has the same color under the 4-coloring.
bool is_paper4_monochromatic(const Cycle& cycle);

}  // namespace qcube
