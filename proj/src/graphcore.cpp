#include "spread/graphcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spread {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxVertices) +
                                "], got " + std::to_string(n));
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::size_t Graph::check_vertex(int v) const {
  if (v < 0 || v >= order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  return static_cast<std::size_t>(v);
}

bool Graph::adjacent(int u, int v) const {
  return adj_[check_vertex(u)].test(check_vertex(v));
}

void Graph::add_edge(int u, int v) {
  auto a = check_vertex(u);
  auto b = check_vertex(v);
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[a].set(b);
  adj_[b].set(a);
}

void Graph::remove_edge(int u, int v) {
  auto a = check_vertex(u);
  auto b = check_vertex(v);
  adj_[a].reset(b);
  adj_[b].reset(a);
}

int Graph::degree(int v) const { return static_cast<int>(adj_[check_vertex(v)].count()); }

std::vector<int> Graph::degrees() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (const auto& r : adj_) out.push_back(static_cast<int>(r.count()));
  return out;
}

Count Graph::edge_count() const {
  Count twice = 0;
  for (const auto& r : adj_) twice += static_cast<Count>(r.count());
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v))) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order())
    throw std::invalid_argument("permutation size does not match graph order");
  Graph g(order());
  for (auto [u, v] : edges()) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return g;
}

DegreeSequence::DegreeSequence(std::vector<int> degs) : degs_(std::move(degs)) {
  const int n = size();
  for (std::size_t j = 0; j < degs_.size(); ++j) {
    if (degs_[j] < 0 || degs_[j] > n - 1)
      throw std::invalid_argument("degree " + std::to_string(degs_[j]) + " outside [0, " +
                                  std::to_string(n - 1) + "]");
    if (j > 0 && degs_[j] > degs_[j - 1])
      throw std::invalid_argument("degree sequence must be nonincreasing");
  }
}

DegreeSequence DegreeSequence::from_unsorted(std::vector<int> degs) {
  std::sort(degs.begin(), degs.end(), std::greater<>());
  return DegreeSequence(std::move(degs));
}

Count DegreeSequence::sum() const { return std::accumulate(degs_.begin(), degs_.end(), Count{0}); }

SpreadParams SpreadParams::make(int n, int k) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("need 1 <= k < n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  SpreadParams p;
  p.n = n;
  p.k = k;
  p.i = (n + k - 1) / k - 1;
  p.t = n - k * p.i;
  return p;
}

Count h_k_sorted(std::span<const int> d, int k) {
  // For each j, entries j+1..hi-1 are within k-1 below d[j].
  Count total = 0;
  std::size_t hi = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (hi < j + 1) hi = j + 1;
    while (hi < d.size() && d[j] - d[hi] < k) ++hi;
    total += static_cast<Count>(hi - j - 1);
  }
  return total;
}

Count h_k_sequence(const DegreeSequence& d, int k) { return h_k_sorted(d.values(), k); }

Count h_k_graph(const Graph& g, int k) {
  auto degs = g.degrees();
  Count total = 0;
  for (std::size_t u = 0; u < degs.size(); ++u)
    for (std::size_t v = u + 1; v < degs.size(); ++v)
      if (std::abs(degs[u] - degs[v]) < k) ++total;
  return total;
}

std::vector<ClosePair> close_pairs(const Graph& g, int k) {
  auto degs = g.degrees();
  std::vector<ClosePair> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      int gap = std::abs(degs[static_cast<std::size_t>(u)] - degs[static_cast<std::size_t>(v)]);
      if (gap < k) out.push_back({u, v, gap});
    }
  return out;
}

std::vector<int> find_close_clique(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || n <= k)
    throw std::invalid_argument("find_close_clique needs 1 <= k < n");
  auto degs = g.degrees();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto da = degs[static_cast<std::size_t>(a)];
    auto db = degs[static_cast<std::size_t>(b)];
    return da != db ? da < db : a < b;
  });
  const auto width = static_cast<std::size_t>(k) + 1;
  for (std::size_t lo = 0; lo + width <= order.size(); ++lo) {
    int span = degs[static_cast<std::size_t>(order[lo + width - 1])] - degs[static_cast<std::size_t>(order[lo])];
    if (span < k) return {order.begin() + static_cast<std::ptrdiff_t>(lo),
                          order.begin() + static_cast<std::ptrdiff_t>(lo + width)};
  }
  throw std::logic_error("internal invariant violated: no window of k+1 pairwise close vertices");
}

DegreeSequence degree_sequence_of(const Graph& g) { return DegreeSequence::from_unsorted(g.degrees()); }

}  // namespace spread
