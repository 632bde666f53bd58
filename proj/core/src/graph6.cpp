#include "erlab/graph6.hpp"

namespace erlab {

namespace {

constexpr int kOffset = 63;

void append_bit(std::string& out, int& filled, int& current, bool bit) {
  current = (current << 1) | (bit ? 1 : 0);
  if (++filled == 6) {
    out.push_back(static_cast<char>(current + kOffset));
    filled = 0;
    current = 0;
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    // 126 marker, then n in three 6-bit groups, big-endian.
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int filled = 0, current = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      append_bit(out, filled, current, g.has_edge(u, v));
  if (filled > 0)
    out.push_back(static_cast<char>((current << (6 - filled)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= text.size())
      throw parse_error("graph6 data ends prematurely", pos);
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kOffset + 63)
      throw parse_error("byte outside graph6 alphabet", pos);
    ++pos;
    return c - kOffset;
  };

  if (text.empty()) throw parse_error("empty graph6 string", 0);
  long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw parse_error("graph6 sizes above 258047 are not supported", pos);
    const long a = take(), b = take(), c = take();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = take();
  }
  if (n < 1 || n > Graph::kMaxVertices)
    throw parse_error("vertex count " + std::to_string(n) +
                          " outside the supported range [1, 64]",
                      0);

  Graph g(static_cast<int>(n));
  const long bits_needed = n * (n - 1) / 2;
  long bit_index = 0;
  int buffer = 0, available = 0;
  int column = 1, row = 0;
  while (bit_index < bits_needed) {
    if (available == 0) {
      buffer = take();
      available = 6;
    }
    const bool bit = (buffer >> (available - 1)) & 1;
    --available;
    if (bit) g.add_edge(row, column);
    if (++row == column) {
      row = 0;
      ++column;
    }
    ++bit_index;
  }
  if (available > 0 && (buffer & ((1 << available) - 1)) != 0)
    throw parse_error("non-zero padding bits", pos - 1);
  if (pos != text.size()) throw parse_error("trailing bytes after graph", pos);
  return g;
}

}  // namespace erlab
