#pragma once

#include <string>
#include <string_view>

#include "balancelab/errors.hpp"
#include "balancelab/graph.hpp"

namespace balancelab {

// graph6: N(n) as one byte n+63 (n <= 62), then the upper triangle read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per
// byte, most significant first, each byte offset by 63. That bit order is the
// colex edge order, so bit k of the payload is edge index k.

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  const int bits = choose2(n);
  std::string out;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(63 + n));
  const EdgeSet edges = g.edge_set();
  for (int base = 0; base < bits; base += 6) {
    int value = 0;
    for (int k = 0; k < 6; ++k) {
      value <<= 1;
      if (base + k < bits && edges.test(base + k)) value |= 1;
    }
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) offset = header.size();
  else if (!text.empty() && text.front() == '>') throw parse_error("graph6: malformed header", 0);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (offset >= text.size()) throw parse_error("graph6: missing vertex count", offset);
  const unsigned char head = static_cast<unsigned char>(text[offset]);
  if (head == 126) throw parse_error("graph6: graphs with more than 62 vertices are not supported", offset);
  if (head < 63 || head > 126) throw parse_error("graph6: byte outside 63..126", offset);
  const int n = head - 63;
  if (n > max_vertices)
    throw parse_error("graph6: " + std::to_string(n) + " vertices exceeds the limit of 16", offset);
  ++offset;

  const int bits = choose2(n);
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t have = text.size() - offset;
  if (have < need) throw parse_error("graph6: truncated edge data", text.size());
  if (have > need) throw parse_error("graph6: trailing bytes after edge data", offset + need);

  EdgeSet edges;
  for (std::size_t i = 0; i < need; ++i) {
    const unsigned char c = static_cast<unsigned char>(text[offset + i]);
    if (c < 63 || c > 126) throw parse_error("graph6: byte outside 63..126", offset + i);
    const int value = c - 63;
    for (int k = 0; k < 6; ++k) {
      const int index = static_cast<int>(i) * 6 + k;
      const bool bit = (value >> (5 - k)) & 1;
      if (!bit) continue;
      if (index >= bits) throw parse_error("graph6: nonzero padding bits", offset + i);
      edges.set(index);
    }
  }
  return Graph::from_edge_set(n, edges);
}

}  // namespace balancelab
