#include "qcube/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qcube {

namespace {

constexpr int kMaxSubgraphDimension = 20;

std::uint32_t word_mask(int n) noexcept {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

// Parses "key=<int>" and returns the integer.
int parse_keyed_int(const std::string& token, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) throw FormatError("expected '" + prefix + "<int>', got '" + token + "'");
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 6) {
    throw FormatError("bad integer in '" + token + "'");
  }
  return std::stoi(digits);
}

}  // namespace

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("dimension must be in 1.." + std::to_string(kMaxDimension) + ", got " +
                                std::to_string(n));
  }
}

int mask_position(int n, std::uint32_t mask) noexcept { return n - std::countr_zero(mask); }

Vertex::Vertex(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  check_dimension(n);
  if ((bits & ~word_mask(n)) != 0) throw std::invalid_argument("vertex word has bits beyond dimension");
}

Vertex Vertex::parse(std::string_view s, int n) {
  check_dimension(n);
  if (static_cast<int>(s.size()) != n) {
    throw std::invalid_argument("vertex '" + std::string(s) + "' has length " + std::to_string(s.size()) +
                                ", expected " + std::to_string(n));
  }
  std::uint32_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("illegal character in vertex '" + std::string(s) + "'");
    bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Vertex(n, bits);
}

int Vertex::weight() const noexcept { return std::popcount(bits_); }

bool Vertex::bit(int pos) const {
  if (pos < 1 || pos > n_) throw std::out_of_range("position " + std::to_string(pos) + " out of range");
  return (bits_ & position_mask(n_, pos)) != 0;
}

Vertex Vertex::flipped(int pos) const {
  if (pos < 1 || pos > n_) throw std::out_of_range("position " + std::to_string(pos) + " out of range");
  return Vertex(n_, bits_ ^ position_mask(n_, pos));
}

std::string Vertex::to_string() const { return word_to_string(bits_, n_); }

std::string word_to_string(std::uint32_t bits, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (bits & (std::uint32_t{1} << (n - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

int hamming(const Vertex& a, const Vertex& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("vertices of different dimension");
  return std::popcount(a.bits() ^ b.bits());
}

std::uint32_t restrict_bits(std::uint32_t word, int n, std::span<const int> positions) {
  std::uint32_t out = 0;
  int previous = 0;
  for (int pos : positions) {
    if (pos < 1 || pos > n) throw std::out_of_range("restriction position " + std::to_string(pos) + " out of range");
    if (pos <= previous) throw std::invalid_argument("restriction positions must be strictly increasing");
    previous = pos;
    out = (out << 1) | ((word & position_mask(n, pos)) ? 1u : 0u);
  }
  return out;
}

std::string restrict(const Vertex& v, std::span<const int> positions) {
  const std::uint32_t bits = restrict_bits(v.bits(), v.dimension(), positions);
  if (positions.empty()) return {};
  return word_to_string(bits, static_cast<int>(positions.size()));
}

std::uint32_t reverse_bits(std::uint32_t word, int n) noexcept {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    out = (out << 1) | ((word >> i) & 1u);
  }
  return out;
}

Vertex reverse_vertex(const Vertex& v) { return Vertex(v.dimension(), reverse_bits(v.bits(), v.dimension())); }

Edge::Edge(Vertex low, int pos) : low_(low), pos_(pos) {
  if (pos < 1 || pos > low.dimension()) throw std::out_of_range("edge position out of range");
  if (low.bit(pos)) throw std::invalid_argument("edge low endpoint must have 0 at the flip position");
}

Edge Edge::between(const Vertex& x, const Vertex& y) {
  if (x.dimension() != y.dimension()) throw std::invalid_argument("edge endpoints of different dimension");
  const std::uint32_t diff = x.bits() ^ y.bits();
  if (std::popcount(diff) != 1) {
    throw std::invalid_argument(x.to_string() + " and " + y.to_string() + " are not at Hamming distance 1");
  }
  const int n = x.dimension();
  return Edge(Vertex(n, x.bits() & y.bits()), mask_position(n, diff));
}

Vertex Edge::high() const { return low_.flipped(pos_); }

int Edge::prefix_weight() const noexcept {
  const int n = low_.dimension();
  // bits strictly above the flip bit
  const int shift = n - pos_ + 1;
  return shift >= 32 ? 0 : std::popcount(low_.bits() >> shift);
}

int Edge::suffix_weight() const noexcept {
  const int n = low_.dimension();
  return std::popcount(low_.bits() & (position_mask(n, pos_) - 1));
}

std::size_t Edge::index() const noexcept { return edge_index(low_.dimension(), low_.bits(), pos_); }

std::vector<std::uint32_t> canonical_sequence(std::span<const std::uint32_t> cycle) {
  const std::size_t len = cycle.size();
  std::vector<std::uint32_t> best(cycle.begin(), cycle.end());
  std::vector<std::uint32_t> candidate(len);
  for (std::size_t start = 0; start < len; ++start) {
    for (int dir : {1, -1}) {
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t offset = dir == 1 ? i : len - i;
        candidate[i] = cycle[(start + offset) % len];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

bool has_chord(std::span<const std::uint32_t> cycle) noexcept {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (std::popcount(cycle[i] ^ cycle[j]) == 1) return true;
    }
  }
  return false;
}

Cycle::Cycle(int n, std::vector<std::uint32_t> words) : n_(n), words_(std::move(words)) {
  check_dimension(n);
  const std::size_t len = words_.size();
  if (len < 4 || len % 2 != 0) throw std::invalid_argument("cycle length must be even and at least 4");
  for (std::size_t i = 0; i < len; ++i) {
    if ((words_[i] & ~word_mask(n)) != 0) throw std::invalid_argument("cycle vertex beyond dimension");
    if (std::popcount(words_[i] ^ words_[(i + 1) % len]) != 1) {
      throw std::invalid_argument("consecutive cycle vertices are not adjacent");
    }
  }
  std::vector<std::uint32_t> sorted = words_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
}

namespace {

Cycle cycle_from_vertices(std::span<const Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty cycle");
  const int n = vertices.front().dimension();
  std::vector<std::uint32_t> words;
  words.reserve(vertices.size());
  for (const Vertex& v : vertices) {
    if (v.dimension() != n) throw std::invalid_argument("cycle vertices of different dimension");
    words.push_back(v.bits());
  }
  return Cycle(n, std::move(words));
}

}  // namespace

Cycle::Cycle(std::span<const Vertex> vertices) : Cycle(cycle_from_vertices(vertices)) {}

Cycle Cycle::parse(std::span<const std::string> words) {
  std::vector<Vertex> vertices;
  vertices.reserve(words.size());
  for (const std::string& w : words) vertices.push_back(Vertex::parse(w));
  return Cycle(vertices);
}

Cycle Cycle::canonical() const { return Cycle(n_, canonical_sequence(words_)); }

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.push_back(Edge::between(vertex(i), vertex((i + 1) % words_.size())));
  }
  return out;
}

std::vector<std::string> Cycle::to_strings() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (std::uint32_t w : words_) out.push_back(word_to_string(w, n_));
  return out;
}

Subgraph::Subgraph(int n) : n_(n) {
  check_dimension(n);
  if (n > kMaxSubgraphDimension) {
    throw GuardError("subgraphs are limited to n <= " + std::to_string(kMaxSubgraphDimension));
  }
  present_.assign(static_cast<std::size_t>(n) << n, 0);
}

Subgraph Subgraph::full(int n) {
  Subgraph g(n);
  for_each_edge(n, [&](const Edge& e) { g.add(e); });
  return g;
}

bool Subgraph::add(const Edge& e) {
  if (e.dimension() != n_) throw std::invalid_argument("edge dimension does not match subgraph");
  auto& slot = present_[e.index()];
  if (slot) return false;
  slot = 1;
  ++count_;
  return true;
}

bool Subgraph::remove(const Edge& e) {
  if (e.dimension() != n_) throw std::invalid_argument("edge dimension does not match subgraph");
  auto& slot = present_[e.index()];
  if (!slot) return false;
  slot = 0;
  --count_;
  return true;
}

bool Subgraph::contains(const Edge& e) const {
  if (e.dimension() != n_) throw std::invalid_argument("edge dimension does not match subgraph");
  return present_[e.index()] != 0;
}

bool Subgraph::contains(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint32_t diff = a ^ b;
  if (std::popcount(diff) != 1) return false;
  return present_[edge_index(n_, a & b, mask_position(n_, diff))] != 0;
}

int Subgraph::degree(std::uint32_t v) const noexcept { return std::popcount(neighbour_mask(v)); }

std::uint32_t Subgraph::neighbour_mask(std::uint32_t v) const noexcept {
  std::uint32_t mask = 0;
  for (int pos = 1; pos <= n_; ++pos) {
    const std::uint32_t bit = position_mask(n_, pos);
    if (present_[edge_index(n_, v & ~bit, pos)]) mask |= bit;
  }
  return mask;
}

std::vector<Edge> Subgraph::edges() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for_each_edge(n_, [&](const Edge& e) {
    if (present_[e.index()]) out.push_back(e);
  });
  return out;
}

void write_subgraph(std::ostream& out, const Subgraph& g) {
  out << "qcube-subgraph n=" << g.dimension() << '\n';
  for (const Edge& e : g.edges()) out << e.low().to_string() << ' ' << e.high().to_string() << '\n';
}

Subgraph read_subgraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty subgraph file");
  std::istringstream header(line);
  std::string magic, n_token, extra;
  if (!(header >> magic >> n_token) || magic != "qcube-subgraph" || (header >> extra)) {
    throw FormatError("malformed header: expected 'qcube-subgraph n=<n>'");
  }
  const int n = parse_keyed_int(n_token, "n");
  if (n < 1 || n > kMaxSubgraphDimension) throw FormatError("subgraph dimension out of range");
  Subgraph g(n);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!(row >> a >> b) || (row >> extra)) {
      throw FormatError("line " + std::to_string(line_no) + ": expected '<low> <high>'");
    }
    try {
      const Edge e = Edge::between(Vertex::parse(a, n), Vertex::parse(b, n));
      if (!g.add(e)) throw FormatError("line " + std::to_string(line_no) + ": duplicate edge");
    } catch (const std::invalid_argument& err) {
      throw FormatError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return g;
}

void save_subgraph(const Subgraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_subgraph(out, g);
  if (!out) throw Error("failed writing '" + path + "'");
}

Subgraph load_subgraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_subgraph(in);
}

}  // namespace qcube
