#pragma once

#include <bitset>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#ifndef SPREAD_MAX_VERTICES
#define SPREAD_MAX_VERTICES 512
#endif

namespace spread {

inline constexpr int kMaxVertices = SPREAD_MAX_VERTICES;

using Count = std::int64_t;
using AdjacencyRow = std::bitset<kMaxVertices>;

/// C(m, 2) with C(m, 2) = 0 for m <= 1.
constexpr Count binom2(Count m) { return m <= 1 ? 0 : m * (m - 1) / 2; }

/// Simple undirected graph on vertices 0..n-1 stored as adjacency-row bitsets.
///
/// Edge mutators keep the rows symmetric and loop-free; once built, a Graph is
/// an ordinary value and every query on it is const.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph complete(int n);

  int order() const { return static_cast<int>(adj_.size()); }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> degrees() const;
  Count edge_count() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  const AdjacencyRow& row(int v) const { return adj_[check_vertex(v)]; }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::size_t check_vertex(int v) const;

  std::vector<AdjacencyRow> adj_;
};

/// Nonincreasing degree sequence with entries in [0, n-1].
class DegreeSequence {
 public:
  DegreeSequence() = default;

  /// Throws std::invalid_argument unless `degs` is nonincreasing with entries in [0, n-1].
  explicit DegreeSequence(std::vector<int> degs);

  static DegreeSequence from_unsorted(std::vector<int> degs);

  int size() const { return static_cast<int>(degs_.size()); }
  std::span<const int> values() const { return degs_; }
  int operator[](int idx) const { return degs_[static_cast<std::size_t>(idx)]; }
  Count sum() const;

  auto operator<=>(const DegreeSequence&) const = default;

 private:
  std::vector<int> degs_;
};

/// n = k*i + t with 1 <= t <= k.
struct SpreadParams {
  int n = 0;
  int k = 0;
  int i = 0;
  int t = 0;

  /// Throws std::invalid_argument unless 1 <= k < n.
  static SpreadParams make(int n, int k);

  bool operator==(const SpreadParams&) const = default;
};

struct ClosePair {
  int u = 0;
  int v = 0;
  int gap = 0;

  bool operator==(const ClosePair&) const = default;
};

Count h_k_graph(const Graph& g, int k);

/// Close-pair count from degrees alone, two-pointer sweep over the sorted values.
Count h_k_sequence(const DegreeSequence& d, int k);

/// Same sweep over a raw nonincreasing span (no validation).
Count h_k_sorted(std::span<const int> nonincreasing, int k);

std::vector<ClosePair> close_pairs(const Graph& g, int k);

/// k+1 vertices whose degrees differ pairwise by less than k, sorted by (degree, index).
/// Requires n > k. Throws std::logic_error if no window qualifies, which would
/// contradict the existence guarantee.
std::vector<int> find_close_clique(const Graph& g, int k);

DegreeSequence degree_sequence_of(const Graph& g);

}  // namespace spread
