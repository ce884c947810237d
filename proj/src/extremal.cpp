#include "spread/extremal.hpp"

namespace spread {

Count f0(int n, int k) {
  auto p = SpreadParams::make(n, k);
  const Count ceil_nk = p.i + 1;
  return (ceil_nk - 2) * binom2(k) + binom2(k + 1) + binom2(n - k * (ceil_nk - 1) - 1);
}

Count f0_grouped(const SpreadParams& p) {
  return binom2(p.t - 1) + binom2(p.k + 1) + static_cast<Count>(p.i - 1) * binom2(p.k);
}

ExtremalBlueprint blueprint(int n, int k) {
  ExtremalBlueprint bp;
  bp.params = SpreadParams::make(n, k);
  const int i = bp.params.i;
  bp.special_index = (i + 1) / 2;
  bp.group_sizes.assign(static_cast<std::size_t>(i) + 1, k);
  bp.group_sizes[0] = bp.params.t - 1;
  bp.group_sizes[static_cast<std::size_t>(bp.special_index)] = k + 1;
  return bp;
}

std::vector<int> extremal_group_of_vertex(const ExtremalBlueprint& bp) {
  std::vector<int> group;
  group.reserve(static_cast<std::size_t>(bp.params.n));
  for (std::size_t j = 0; j < bp.group_sizes.size(); ++j)
    group.insert(group.end(), static_cast<std::size_t>(bp.group_sizes[j]), static_cast<int>(j));
  return group;
}

Graph construct_extremal(int n, int k) {
  auto bp = blueprint(n, k);
  auto group = extremal_group_of_vertex(bp);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (group[static_cast<std::size_t>(u)] + group[static_cast<std::size_t>(v)] > bp.params.i) g.add_edge(u, v);
  return g;
}

}  // namespace spread
