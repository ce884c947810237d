#pragma once

#include <string>
#include <string_view>

#include "spread/graphcore.hpp"

namespace spread {

/// graph6 without the ">>graph6<<" header.
std::string to_graph6(const Graph& g);

/// Throws std::invalid_argument on malformed input. Trailing newline/whitespace is ignored.
Graph from_graph6(std::string_view text);

/// "# n <order>" header followed by one "u v" line per edge (u < v, 0-based).
std::string to_edge_list(const Graph& g);

/// Accepts the format above; without a header the order is max index + 1.
/// Blank lines and other '#' lines are skipped.
Graph from_edge_list(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace spread
