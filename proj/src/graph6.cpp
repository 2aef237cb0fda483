#include "reed/graph6.hpp"

#include <vector>

#include "reed/errors.hpp"

namespace reed {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

} // namespace

Graph graph_from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("missing length byte", pos);

  const int lead = static_cast<unsigned char>(text[pos]);
  if (lead == 126) throw ParseError("graphs with more than 62 vertices are unsupported", pos);
  if (lead < kBias || lead > 126) throw ParseError("invalid length byte", pos);
  const int n = lead - kBias;
  ++pos;

  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos < byte_count) throw ParseError("truncated adjacency data", text.size());

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  for (std::size_t b = 0; b < byte_count; ++b, ++pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("character out of graph6 range", pos);
    const int group = c - kBias;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (group >> k) & 1;
      if (bit >= bit_count) {
        if (set) throw ParseError("non-zero padding bit", pos);
        continue;
      }
      if (!set) continue;
      // column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
      std::size_t j = 1;
      std::size_t start = 0;
      while (start + j <= bit) {
        start += j;
        ++j;
      }
      const std::size_t i = bit - start;
      rows[i] |= VertexSet::bit(static_cast<Vertex>(j));
      rows[j] |= VertexSet::bit(static_cast<Vertex>(i));
    }
  }
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return Graph::from_rows(n, rows);
}

std::string graph_to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    throw UnsupportedSize("graph6 encoding supports at most 62 vertices, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

} // namespace reed
