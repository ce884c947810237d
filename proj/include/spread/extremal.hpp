#pragma once

#include <vector>

#include "spread/graphcore.hpp"

namespace spread {

/// Group layout of the extremal graph: V_0 has t-1 vertices, V_{floor((i+1)/2)}
/// has k+1, every other group has k.
struct ExtremalBlueprint {
  SpreadParams params;
  std::vector<int> group_sizes;
  int special_index = 0;
};

/// Conjectured minimum number of close pairs over n-vertex graphs.
/// Throws std::invalid_argument unless 1 <= k < n.
Count f0(int n, int k);

/// f0 written as C(t-1,2) + C(k+1,2) + (i-1)*C(k,2).
Count f0_grouped(const SpreadParams& p);

ExtremalBlueprint blueprint(int n, int k);

/// Vertices are numbered group by group starting with V_0. Two distinct
/// vertices are adjacent iff their group indices sum to more than i, so every
/// vertex of V_j has degree k*j.
Graph construct_extremal(int n, int k);

/// Group index of each vertex in the construct_extremal numbering.
std::vector<int> extremal_group_of_vertex(const ExtremalBlueprint& bp);

}  // namespace spread
