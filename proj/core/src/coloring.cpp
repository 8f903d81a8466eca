#include "qcube/coloring.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qcube {

namespace {

constexpr std::uint8_t kUnset = 0xFF;
constexpr int kMaxPalette = 255;

int paper_color_raw(std::uint32_t low, int n, int pos) noexcept {
  const int k = std::popcount(low);
  const int shift = n - pos + 1;
  const int prefix = shift >= 32 ? 0 : std::popcount(low >> shift);
  return 2 * (k & 1) + (prefix & 1);
}

int parse_header_int(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) throw FormatError("malformed header: expected '" + prefix + "<int>'");
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("malformed header: bad integer in '" + token + "'");
  }
  return std::stoi(digits);
}

}  // namespace

ColorId paper_color(const Edge& e) noexcept {
  return ColorId{paper_color_raw(e.low().bits(), e.dimension(), e.position())};
}

ColorId layer_parity_color(const Edge& e) noexcept { return ColorId{e.layer() & 1}; }

ColorId reversed_paper_color(const Edge& e) {
  return paper_color(Edge::between(reverse_vertex(e.low()), reverse_vertex(e.high())));
}

Coloring Coloring::paper4(int n) {
  check_dimension(n);
  return Coloring(ColoringKind::Paper4, n, 4);
}

Coloring Coloring::layer2(int n) {
  check_dimension(n);
  return Coloring(ColoringKind::Layer2, n, 2);
}

Coloring Coloring::paper4_reversed(int n) {
  check_dimension(n);
  return Coloring(ColoringKind::Paper4Reversed, n, 4);
}

Coloring Coloring::from_table(int n, int palette, std::vector<std::uint8_t> colors,
                              std::optional<std::string> source) {
  check_dimension(n);
  if (n > kMaxCensusDimension) throw GuardError("table colorings are limited to n <= 20");
  if (palette < 1 || palette > kMaxPalette) throw std::invalid_argument("palette size must be in 1..255");
  if (colors.size() != (static_cast<std::size_t>(n) << n)) {
    throw std::invalid_argument("color table must have n * 2^n slots");
  }
  for_each_edge(n, [&](const Edge& e) {
    const std::uint8_t c = colors[e.index()];
    if (c == kUnset) throw std::invalid_argument("incomplete coloring");
    if (c >= palette) throw std::invalid_argument("color " + std::to_string(c) + " outside palette");
  });
  Coloring out(ColoringKind::Table, n, palette);
  out.table_ = std::move(colors);
  out.source_ = std::move(source);
  return out;
}

Coloring Coloring::constant(int n) {
  check_dimension(n);
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) << n, 0);
  return from_table(n, 1, std::move(table));
}

Coloring Coloring::named(const std::string& name, int n) {
  if (name == "paper4") return paper4(n);
  if (name == "layer2") return layer2(n);
  if (name == "paper4-reversed") return paper4_reversed(n);
  throw std::invalid_argument("unknown coloring '" + name + "'");
}

std::string Coloring::name() const {
  switch (kind_) {
    case ColoringKind::Paper4: return "paper4";
    case ColoringKind::Layer2: return "layer2";
    case ColoringKind::Paper4Reversed: return "paper4-reversed";
    case ColoringKind::Table: return "file";
  }
  return "file";
}

ColorId Coloring::color(const Edge& e) const {
  if (e.dimension() != n_) throw std::invalid_argument("edge dimension does not match coloring");
  return ColorId{color_of(e.low().bits(), e.position())};
}

int Coloring::color_of(std::uint32_t low, int pos) const noexcept {
  switch (kind_) {
    case ColoringKind::Paper4:
      return paper_color_raw(low, n_, pos);
    case ColoringKind::Layer2:
      return std::popcount(low) & 1;
    case ColoringKind::Paper4Reversed: {
      const std::uint32_t rlow = reverse_bits(low, n_);
      return paper_color_raw(rlow, n_, n_ + 1 - pos);
    }
    case ColoringKind::Table:
      return table_[edge_index(n_, low, pos)];
  }
  return 0;
}

std::vector<std::uint64_t> class_sizes(const Coloring& coloring) {
  const int n = coloring.dimension();
  if (n > kMaxCensusDimension) {
    throw GuardError("class census is limited to n <= " + std::to_string(kMaxCensusDimension));
  }
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(coloring.palette()), 0);
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t low = 0; low < count; ++low) {
    for (int pos = 1; pos <= n; ++pos) {
      if (low & position_mask(n, pos)) continue;
      ++sizes[static_cast<std::size_t>(coloring.color_of(low, pos))];
    }
  }
  return sizes;
}

void write_coloring(std::ostream& out, const Coloring& coloring) {
  const int n = coloring.dimension();
  if (n > kMaxCensusDimension) throw GuardError("coloring files are limited to n <= 20");
  out << "qcube-coloring n=" << n << " palette=" << coloring.palette() << '\n';
  for_each_edge(n, [&](const Edge& e) {
    out << e.low().to_string() << ' ' << e.high().to_string() << ' ' << coloring.color(e).value << '\n';
  });
}

Coloring read_coloring(std::istream& in, std::optional<std::string> source) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("malformed header: empty coloring file");
  std::istringstream header(line);
  std::string magic, n_token, palette_token, extra;
  if (!(header >> magic >> n_token >> palette_token) || magic != "qcube-coloring" || (header >> extra)) {
    throw FormatError("malformed header: expected 'qcube-coloring n=<n> palette=<k>'");
  }
  const int n = parse_header_int(n_token, "n");
  const int palette = parse_header_int(palette_token, "palette");
  if (n < 1 || n > kMaxCensusDimension) throw FormatError("malformed header: dimension out of range");
  if (palette < 1 || palette > kMaxPalette) throw FormatError("malformed header: palette out of range");

  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) << n, kUnset);
  std::uint64_t assigned = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::istringstream row(line);
    std::string a, b, c;
    if (!(row >> a >> b >> c) || (row >> extra)) throw FormatError(where + "expected '<low> <high> <color>'");
    Edge e = [&] {
      try {
        return Edge::between(Vertex::parse(a, n), Vertex::parse(b, n));
      } catch (const std::exception& err) {
        throw FormatError(where + err.what());
      }
    }();
    if (c.empty() || c.size() > 3 || c.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError(where + "bad color '" + c + "'");
    }
    const int color = std::stoi(c);
    if (color >= palette) {
      throw FormatError(where + "color " + c + " outside palette of size " + std::to_string(palette));
    }
    auto& slot = table[e.index()];
    if (slot != kUnset) throw FormatError(where + "duplicate edge");
    slot = static_cast<std::uint8_t>(color);
    ++assigned;
  }
  if (assigned != edge_count(n)) {
    throw FormatError("incomplete coloring: " + std::to_string(assigned) + " of " + std::to_string(edge_count(n)) +
                      " edges assigned");
  }
  return Coloring::from_table(n, palette, std::move(table), std::move(source));
}

void save_coloring(const Coloring& coloring, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_coloring(out, coloring);
  if (!out) throw Error("failed writing '" + path + "'");
}

Coloring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_coloring(in, path);
}

}  // namespace qcube
