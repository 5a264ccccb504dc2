#include "deckforge/graph6.hpp"

namespace deckforge {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

Graph decode(std::string_view text, std::size_t base, bool allow_long) {
  if (text.empty()) throw ParseError(base, "empty graph6 record");
  std::size_t pos = 0;
  auto sextet = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError(base + at, "byte outside graph6 range 63..126");
    return c - 63;
  };
  int n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (!allow_long) throw ParseError(base, "orders above 62 are not supported in files");
    if (text.size() < 4 || static_cast<unsigned char>(text[1]) == 126) {
      throw ParseError(base + 1, "unsupported long size prefix");
    }
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    if (n > kMaxVertices) throw ParseError(base + 1, "order exceeds 64");
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    std::size_t at = text.size() - pos < need ? text.size() : pos + need;
    throw ParseError(base + at, "expected " + std::to_string(need) + " adjacency bytes, got " +
                                    std::to_string(text.size() - pos));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits must be zero.
  if (k % 6 != 0) {
    int last = sextet(pos + k / 6);
    if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError(base + pos + k / 6, "nonzero padding bits");
  }
  return g;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kGraph6ShortMax) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) return decode(text.substr(kHeader.size()), kHeader.size(), false);
  return decode(text, 0, false);
}

Graph decode_graph6_any(std::string_view text) { return decode(text, 0, true); }

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  bool first = true;
  while (std::getline(in, line)) {
    std::string_view body = line;
    std::size_t base = offset;
    offset += line.size() + 1;
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    if (first && body.starts_with(kHeader)) {
      body.remove_prefix(kHeader.size());
      base += kHeader.size();
    }
    first = false;
    if (body.empty()) continue;
    out.push_back(decode(body, base, false));
  }
  return out;
}

}  // namespace deckforge
