#include "cleangraph/cli/export.hpp"

#include <cstdint>

#include "cleangraph/error.hpp"

namespace cleangraph::cli {

namespace {

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string export_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int bits = 0, group = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(group + 63);
        bits = group = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((group << (6 - bits)) + 63);
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw invalid_spec("graph6: truncated input");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw invalid_spec("graph6: byte out of range");
    return c - 63;
  };
  std::uint64_t n = next();
  if (n == 63) {
    int groups = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      groups = 6;
    }
    n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | next();
  }
  GraphBuilder b;
  for (std::uint64_t v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
  std::uint64_t group = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        group = next();
        left = 6;
      }
      --left;
      if ((group >> left) & 1) b.add_edge(i, j);
    }
  }
  if (pos != text.size()) throw invalid_spec("graph6: trailing bytes");
  return std::move(b).build();
}

std::string export_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + quoted(g.label(v)) + ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  " + quoted(g.label(u)) + " -- " + quoted(g.label(v)) + ";\n";
  }
  return out + "}\n";
}

}  // namespace cleangraph::cli
