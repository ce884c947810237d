#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spread/graphcore.hpp"

namespace spread {

/// Erdos-Gallai test on a nonincreasing span.
bool is_graphical(std::span<const int> nonincreasing);
bool is_graphical(const DegreeSequence& d);

/// Havel-Hakimi. Returns std::nullopt when the sequence cannot be realized.
std::optional<Graph> try_realize(const DegreeSequence& d);

/// Havel-Hakimi realization; vertex v receives degree d[v].
/// Throws std::invalid_argument on non-graphical input.
Graph realize(const DegreeSequence& d);

/// Traverses every nonincreasing sequence of length n over [0, n-1] in
/// lexicographic order. `visitor.enter(prefix)` is called on each nonempty
/// prefix (including complete ones); returning false skips that subtree.
/// `visitor.leaf(seq)` is called for each accepted complete sequence.
template <typename Visitor>
void enumerate_sequences(int n, Visitor&& visitor);

struct EnumerationConfig {
  int n = 0;
  int k = 0;
  /// Only sequences with h_k <= bound are searched for; nullopt means unbounded.
  std::optional<Count> bound;
  std::optional<std::uint64_t> node_limit;
  int parallel_width = 1;
  /// Number of lexicographically first minimizers to keep. Once that many are
  /// held, ties are pruned like worse prefixes.
  std::size_t witness_limit = 16;

  void validate() const;
};

struct SearchOutcome {
  int n = 0;
  int k = 0;
  /// nullopt when no graphical sequence with h_k <= bound exists.
  std::optional<Count> min_h;
  /// The lexicographically first minimizers, at most witness_limit of them.
  std::vector<DegreeSequence> witnesses;
  std::uint64_t nodes_visited = 0;
  bool exhausted = false;
  double wall_time_ms = 0.0;
};

/// Minimum of h_k over graphical sequences of length n, by depth-first
/// extension of nonincreasing prefixes. Prunes a prefix when its close pairs
/// plus a lower bound on pairs forced among the unplaced entries exceed the
/// incumbent, or when no completion can satisfy the Erdos-Gallai inequalities.
/// Subtrees keyed by the first two entries run independently, so the result
/// does not depend on parallel_width.
SearchOutcome minimize_hk(const EnumerationConfig& cfg);

/// Lower bound on close pairs among `slots` entries that all lie in [0, max_value].
Count forced_close_pairs(int slots, int max_value, int k);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visitor>
void enumerate_from(std::vector<int>& prefix, int n, int cap, Visitor& visitor) {
  for (int v = 0; v <= cap; ++v) {
    prefix.push_back(v);
    std::span<const int> view(prefix);
    if (visitor.enter(view)) {
      if (static_cast<int>(prefix.size()) == n)
        visitor.leaf(view);
      else
        enumerate_from(prefix, n, v, visitor);
    }
    prefix.pop_back();
  }
}

}  // namespace detail

template <typename Visitor>
void enumerate_sequences(int n, Visitor&& visitor) {
  if (n < 1) return;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  detail::enumerate_from(prefix, n, n - 1, visitor);
}

}  // namespace spread
