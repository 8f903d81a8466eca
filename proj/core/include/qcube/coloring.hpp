#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcube/hypercube.hpp"

namespace qcube {

/// Color of an edge. For the 4-coloring, value = 2*c1 + c2.
struct ColorId {
  int value = 0;

  static constexpr ColorId pair(int c1, int c2) noexcept { return ColorId{2 * c1 + c2}; }
  [[nodiscard]] constexpr int c1() const noexcept { return value >> 1; }
  [[nodiscard]] constexpr int c2() const noexcept { return value & 1; }

  friend constexpr auto operator<=>(ColorId, ColorId) = default;
};

/// (layer parity, prefix-weight parity).
ColorId paper_color(const Edge& e) noexcept;
/// Layer parity only.
ColorId layer_parity_color(const Edge& e) noexcept;
/// paper_color of the edge between the reversed endpoints.
ColorId reversed_paper_color(const Edge& e);

enum class ColoringKind { Paper4, Layer2, Paper4Reversed, Table };

/// A total, deterministic coloring of E(Q_n). Rule-based kinds are
/// evaluated on the fly; `Table` colorings are stored per edge.
class Coloring {
 public:
  static Coloring paper4(int n);
  static Coloring layer2(int n);
  static Coloring paper4_reversed(int n);
  /// `colors` is indexed by Edge::index(); every edge must be assigned.
  static Coloring from_table(int n, int palette, std::vector<std::uint8_t> colors,
                             std::optional<std::string> source = std::nullopt);
  /// Every edge gets color 0.
  static Coloring constant(int n);
  /// paper4 | layer2 | paper4-reversed
  static Coloring named(const std::string& name, int n);

  [[nodiscard]] ColoringKind kind() const noexcept { return kind_; }
  /// paper4 | layer2 | paper4-reversed | file
  [[nodiscard]] std::string name() const;
  [[nodiscard]] const std::optional<std::string>& source() const noexcept { return source_; }
  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] int palette() const noexcept { return palette_; }

  [[nodiscard]] ColorId color(const Edge& e) const;
  /// Unchecked hot-path lookup by lower endpoint and flip position.
  [[nodiscard]] int color_of(std::uint32_t low, int pos) const noexcept;

 private:
  Coloring(ColoringKind kind, int n, int palette) : kind_(kind), n_(n), palette_(palette) {}

  ColoringKind kind_;
  int n_;
  int palette_;
  std::vector<std::uint8_t> table_;
  std::optional<std::string> source_;
};

inline constexpr int kMaxCensusDimension = 20;

/// Edge count per color; sums to n * 2^(n-1).
std::vector<std::uint64_t> class_sizes(const Coloring& coloring);

/// Coloring file: header `qcube-coloring n=<n> palette=<k>`, then
/// `<low> <high> <color>` per edge in ascending (low, position) order.
void write_coloring(std::ostream& out, const Coloring& coloring);
Coloring read_coloring(std::istream& in, std::optional<std::string> source = std::nullopt);
void save_coloring(const Coloring& coloring, const std::string& path);
Coloring load_coloring(const std::string& path);

}  // namespace qcube
