#include "ngcheck/graph.hpp"

#include <string>

namespace ngcheck {

// Single-byte-header graph6: byte 0 is n + 63, then ceil(n(n-1)/2 / 6) bytes
// of 63 + six bits each, upper triangle column by column, zero padded.

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty record");
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw Graph6Error("graph6: multi-byte size header (n > 62) not supported");
  const int n = header - 63;
  if (n < 1 || n > Graph::kMaxOrder) {
    throw Graph6Error("graph6: order byte out of range");
  }
  const int bits = edge_slot_count(n);
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw Graph6Error("graph6: expected " + std::to_string(expected) + " bytes for n=" +
                      std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  for (std::size_t k = 1; k < text.size(); ++k) {
    const int c = static_cast<unsigned char>(text[k]);
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside [63,126] at offset " + std::to_string(k));
  }

  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    const int pad = 6 - bits % 6;
    if ((last & ((1 << pad) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + (edge_slot_count(n) + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

}  // namespace ngcheck
