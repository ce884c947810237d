#include "spread/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace spread {
namespace {

constexpr int kBias = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw std::invalid_argument("graph6: byte out of range");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_digits = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) throw std::invalid_argument("graph6: truncated size");
    for (int j = 0; j < count; ++j) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
  };
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    read_digits(3);
  } else {
    pos = 2;
    read_digits(6);
  }
  if (n < 1 || n > static_cast<std::uint64_t>(kMaxVertices))
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " unsupported");

  const auto order = static_cast<int>(n);
  const std::uint64_t nbits = n * (n - 1) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw std::invalid_argument("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                                std::to_string(text.size() - pos));

  Graph g(order);
  std::uint64_t bit = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = sextet(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (nbits % 6 != 0) {
    int last = sextet(text.back());
    if ((last & ((1 << (6 - nbits % 6)) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  int declared = -1;
  int max_index = -1;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      std::istringstream hdr{std::string(s.substr(1))};
      std::string key;
      int value = 0;
      if (hdr >> key >> value && key == "n") declared = value;
      continue;
    }
    std::istringstream ls{std::string(s)};
    int u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw std::invalid_argument("edge list: malformed line " + std::to_string(lineno));
    if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex on line " + std::to_string(lineno));
    max_index = std::max({max_index, u, v});
    edges.emplace_back(u, v);
  }
  int n = declared >= 0 ? declared : max_index + 1;
  if (max_index >= n) throw std::invalid_argument("edge list: vertex index exceeds declared order");
  if (n < 1) throw std::invalid_argument("edge list: empty graph needs an '# n' header");
  return Graph::from_edges(n, edges);
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << v << " (d=" << g.degree(v) << ")\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace spread
