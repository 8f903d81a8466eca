#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcube {

/// Largest dimension any Q_n value may carry. Enumeration entry points
/// apply their own, much tighter guards.
inline constexpr int kMaxDimension = 24;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested size exceeds an enumeration guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Malformed coloring or subgraph file.
class FormatError : public Error {
 public:
  using Error::Error;
};

void check_dimension(int n);

/// Mask of the bit holding position `pos` (1-based, leftmost = most significant).
constexpr std::uint32_t position_mask(int n, int pos) noexcept {
  return std::uint32_t{1} << (n - pos);
}

/// Position (1-based) of the single set bit in `mask`.
int mask_position(int n, std::uint32_t mask) noexcept;

constexpr std::uint64_t vertex_count(int n) noexcept { return std::uint64_t{1} << n; }
constexpr std::uint64_t edge_count(int n) noexcept {
  return n == 0 ? 0 : static_cast<std::uint64_t>(n) << (n - 1);
}

/// A vertex of Q_n as an n-bit word. Position 1 is the leftmost character
/// of the string form and the most significant bit, so numeric order and
/// string order coincide.
class Vertex {
 public:
  Vertex(int n, std::uint32_t bits);

  static Vertex parse(std::string_view s, int n);
  static Vertex parse(std::string_view s) { return parse(s, static_cast<int>(s.size())); }

  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] std::uint32_t bits() const noexcept { return bits_; }
  [[nodiscard]] int weight() const noexcept;
  [[nodiscard]] bool bit(int pos) const;
  [[nodiscard]] Vertex flipped(int pos) const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  int n_;
  std::uint32_t bits_;
};

std::string word_to_string(std::uint32_t bits, int n);

int hamming(const Vertex& a, const Vertex& b);

/// Word formed by the bits of `v` at the given positions, in order.
/// Positions must be strictly increasing and within 1..n.
std::string restrict(const Vertex& v, std::span<const int> positions);

/// Same as `restrict`, on a raw word; result packed MSB-first into |I| bits.
std::uint32_t restrict_bits(std::uint32_t word, int n, std::span<const int> positions);

/// Mirror image: bit at position i moves to position n+1-i.
Vertex reverse_vertex(const Vertex& v);
std::uint32_t reverse_bits(std::uint32_t word, int n) noexcept;

/// An edge of Q_n stored by its 0-side endpoint and the flip position.
class Edge {
 public:
  Edge(Vertex low, int pos);

  static Edge between(const Vertex& x, const Vertex& y);

  [[nodiscard]] const Vertex& low() const noexcept { return low_; }
  [[nodiscard]] Vertex high() const;
  [[nodiscard]] int position() const noexcept { return pos_; }
  [[nodiscard]] int dimension() const noexcept { return low_.dimension(); }
  /// Edge layer: weight of the lower endpoint.
  [[nodiscard]] int layer() const noexcept { return low_.weight(); }
  /// Ones strictly before the flip position.
  [[nodiscard]] int prefix_weight() const noexcept;
  /// Ones strictly after the flip position.
  [[nodiscard]] int suffix_weight() const noexcept;
  /// Dense key in [0, n * 2^n); half of the range is unused.
  [[nodiscard]] std::size_t index() const noexcept;

  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex low_;
  int pos_;
};

inline Edge edge_between(const Vertex& x, const Vertex& y) { return Edge::between(x, y); }

inline std::size_t edge_index(int n, std::uint32_t low, int pos) noexcept {
  return static_cast<std::size_t>(low) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(pos - 1);
}

/// Calls fn(Edge) for every edge of Q_n in ascending (low value, position) order.
template <typename Fn>
void for_each_edge(int n, Fn&& fn) {
  check_dimension(n);
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t low = 0; low < count; ++low) {
    for (int pos = 1; pos <= n; ++pos) {
      if ((low & position_mask(n, pos)) == 0) fn(Edge(Vertex(n, low), pos));
    }
  }
}

/// Canonical representative of a closed vertex sequence: minimum over all
/// rotations and both directions, compared lexicographically.
std::vector<std::uint32_t> canonical_sequence(std::span<const std::uint32_t> cycle);

/// True if two cyclically non-consecutive entries are Q_n neighbours.
bool has_chord(std::span<const std::uint32_t> cycle) noexcept;

/// A cycle of Q_n held as its vertex sequence.
class Cycle {
 public:
  /// Validates: even length >= 4, distinct vertices, consecutive at distance 1.
  Cycle(int n, std::vector<std::uint32_t> words);
  Cycle(std::span<const Vertex> vertices);

  static Cycle parse(std::span<const std::string> words);

  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] std::size_t length() const noexcept { return words_.size(); }
  [[nodiscard]] std::span<const std::uint32_t> words() const noexcept { return words_; }
  [[nodiscard]] Vertex vertex(std::size_t i) const { return Vertex(n_, words_.at(i)); }
  [[nodiscard]] Cycle canonical() const;
  [[nodiscard]] bool is_induced() const noexcept { return !has_chord(words_); }
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::vector<std::string> to_strings() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> words_;
};

inline bool is_induced_cycle(const Cycle& c) noexcept { return c.is_induced(); }

/// Edge subset of Q_n.
class Subgraph {
 public:
  explicit Subgraph(int n);
  static Subgraph full(int n);

  [[nodiscard]] int dimension() const noexcept { return n_; }
  /// Returns false if the edge was already present.
  bool add(const Edge& e);
  bool remove(const Edge& e);
  [[nodiscard]] bool contains(const Edge& e) const;
  /// Raw query; false when a and b are not Q_n neighbours.
  [[nodiscard]] bool contains(std::uint32_t a, std::uint32_t b) const noexcept;
  [[nodiscard]] std::size_t edge_count() const noexcept { return count_; }
  [[nodiscard]] int degree(std::uint32_t v) const noexcept;
  /// Bitmask of flip bits leading from v along edges of the subgraph.
  [[nodiscard]] std::uint32_t neighbour_mask(std::uint32_t v) const noexcept;
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> present_;
  std::size_t count_ = 0;
};

/// Subgraph file: header `qcube-subgraph n=<n>`, then `<low> <high>` per edge.
void write_subgraph(std::ostream& out, const Subgraph& g);
Subgraph read_subgraph(std::istream& in);
void save_subgraph(const Subgraph& g, const std::string& path);
Subgraph load_subgraph(const std::string& path);

}  // namespace qcube
