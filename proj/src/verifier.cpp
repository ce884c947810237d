#include "spread/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "spread/extremal.hpp"

namespace spread {

bool conjecture_holds(const SearchOutcome& o, Count f0_value) {
  return o.exhausted && o.min_h.has_value() && *o.min_h >= f0_value;
}

VerificationEntry verify_pair(int n, int k, const VerifyOptions& opts) {
  VerificationEntry e;
  e.n = n;
  e.k = k;
  e.f0 = f0(n, k);
  EnumerationConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.bound = e.f0;
  cfg.node_limit = opts.node_limit;
  cfg.parallel_width = opts.parallel_width;
  cfg.witness_limit = opts.witness_limit;
  e.outcome = minimize_hk(cfg);
  e.conjecture_holds = conjecture_holds(e.outcome, e.f0);
  return e;
}

VerificationReport verify_range(int n_max, const VerifyOptions& opts,
                                const std::function<void(const VerificationEntry&)>& on_entry) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  VerificationReport rep;
  rep.n_max = n_max;
  rep.k_filter = opts.k;

  std::map<std::pair<int, int>, const VerificationEntry*> done;
  for (const auto& e : opts.resume_from) done[{e.n, e.k}] = &e;

  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      if (opts.k && *opts.k != k) continue;
      VerificationEntry e;
      if (auto it = done.find({n, k}); it != done.end() && it->second->outcome.exhausted) {
        e = *it->second;
      } else {
        e = verify_pair(n, k, opts);
        if (on_entry) on_entry(e);
      }
      auto& t = rep.totals;
      ++t.entries;
      t.nodes += e.outcome.nodes_visited;
      if (e.conjecture_holds) ++t.holds;
      if (!e.outcome.exhausted) ++t.incomplete;
      if (e.outcome.min_h && *e.outcome.min_h < e.f0) ++t.counterexamples;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

IntervalProfile check_interval_profile(const Graph& g, const DegreePartition& partition) {
  IntervalProfile out;
  out.profile = GroupProfile::from_counts(partition.params(), partition.counts(g.degrees()));
  out.balanced = out.profile.p2 >= 0;
  return out;
}

IntervalProfile check_interval_profile(const Graph& g, int k) {
  return check_interval_profile(g, DegreePartition::standard(SpreadParams::make(g.order(), k)));
}

// --- five-block family -----------------------------------------------------

const char* to_string(PartKind kind) {
  switch (kind) {
    case PartKind::empty: return "empty";
    case PartKind::complete: return "complete";
    case PartKind::threshold: return "threshold";
  }
  return "?";
}

std::optional<PartKind> parse_part_kind(std::string_view name) {
  if (name == "empty") return PartKind::empty;
  if (name == "complete") return PartKind::complete;
  if (name == "threshold") return PartKind::threshold;
  return std::nullopt;
}

int BlockFamilySpec::order() const {
  int total = 0;
  for (int s : sizes) total += s;
  return total;
}

namespace {

enum Block { B1, B2, B3, B4, B5 };

bool joined(const PartChoice& c, int a, int b) {
  switch (c.kind) {
    case PartKind::empty: return false;
    case PartKind::complete: return true;
    case PartKind::threshold: return a + b >= c.parameter;
  }
  return false;
}

// Largest a + b over the pairs a part can join; -1 when the part has no pairs.
int max_index_sum(int size_x, int size_y, bool interior) {
  if (interior) return size_x >= 2 ? 2 * size_x - 3 : -1;
  return size_x > 0 && size_y > 0 ? size_x + size_y - 2 : -1;
}

std::vector<PartChoice> part_options(const std::vector<PartKind>& kinds, int top) {
  if (top < 0) return {PartChoice{}};
  std::vector<PartChoice> out;
  for (auto kind : kinds) {
    if (kind == PartKind::threshold) {
      for (int param = 1; param <= top; ++param) out.push_back({PartKind::threshold, param});
    } else {
      out.push_back({kind, 0});
    }
  }
  return out;
}

struct FreeParts {
  std::vector<PartChoice> b3, b2b4, b4b5, b1b5;

  FreeParts(const std::array<int, 5>& s, const std::vector<PartKind>& kinds)
      : b3(part_options(kinds, max_index_sum(s[B3], 0, true))),
        b2b4(part_options(kinds, max_index_sum(s[B2], s[B4], false))),
        b4b5(part_options(kinds, max_index_sum(s[B4], s[B5], false))),
        b1b5(part_options(kinds, max_index_sum(s[B1], s[B5], false))) {}

  std::uint64_t size() const {
    return static_cast<std::uint64_t>(b3.size()) * b2b4.size() * b4b5.size() * b1b5.size();
  }
};

std::vector<std::array<int, 5>> compositions(int n) {
  std::vector<std::array<int, 5>> out;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c)
        for (int d = 0; a + b + c + d <= n; ++d) out.push_back({a, b, c, d, n - a - b - c - d});
  return out;
}

std::vector<std::array<int, 5>> grid_sizes(int n, const FamilyGrid& grid) {
  if (grid.sizes.empty()) return compositions(n);
  for (const auto& s : grid.sizes) {
    int total = 0;
    for (int v : s) {
      if (v < 0) throw std::invalid_argument("block sizes must be nonnegative");
      total += v;
    }
    if (total != n) throw std::invalid_argument("block sizes must sum to n");
  }
  return grid.sizes;
}

}  // namespace

Graph build_block_graph(const BlockFamilySpec& spec) {
  const int n = spec.order();
  Graph g(n);
  std::array<int, 6> first{};
  for (int b = 0; b < 5; ++b) first[static_cast<std::size_t>(b) + 1] = first[static_cast<std::size_t>(b)] + spec.sizes[static_cast<std::size_t>(b)];
  auto size = [&](int b) { return spec.sizes[static_cast<std::size_t>(b)]; };
  auto at = [&](int b, int idx) { return first[static_cast<std::size_t>(b)] + idx; };

  auto fill_interior = [&](int b, const PartChoice& c) {
    for (int x = 0; x < size(b); ++x)
      for (int y = x + 1; y < size(b); ++y)
        if (joined(c, x, y)) g.add_edge(at(b, x), at(b, y));
  };
  auto fill_pair = [&](int bx, int by, const PartChoice& c) {
    for (int x = 0; x < size(bx); ++x)
      for (int y = 0; y < size(by); ++y)
        if (joined(c, x, y)) g.add_edge(at(bx, x), at(by, y));
  };
  const PartChoice all{PartKind::complete, 0};

  fill_interior(B1, all);
  fill_interior(B2, all);
  fill_interior(B3, spec.b3_interior);
  fill_pair(B1, B2, all);
  fill_pair(B1, B3, all);
  fill_pair(B1, B4, all);
  fill_pair(B2, B3, all);
  fill_pair(B2, B4, spec.b2_b4);
  fill_pair(B4, B5, spec.b4_b5);
  fill_pair(B1, B5, spec.b1_b5);
  return g;
}

FamilyGridTooLarge::FamilyGridTooLarge(std::uint64_t estimate, std::uint64_t limit)
    : std::length_error("block family grid has " + std::to_string(estimate) + " candidates, limit is " +
                        std::to_string(limit)),
      estimate_(estimate) {}

std::uint64_t estimate_family_size(int n, const FamilyGrid& grid) {
  std::uint64_t total = 0;
  for (const auto& s : grid_sizes(n, grid)) total += FreeParts(s, grid.choices).size();
  return total;
}

FamilyOutcome search_block_family(int n, int k, const FamilyGrid& grid) {
  SpreadParams::make(n, k);
  if (grid.choices.empty()) throw std::invalid_argument("family search needs at least one part choice");
  const auto started = std::chrono::steady_clock::now();
  const auto all_sizes = grid_sizes(n, grid);
  if (auto est = estimate_family_size(n, grid); est > grid.max_candidates)
    throw FamilyGridTooLarge(est, grid.max_candidates);

  FamilyOutcome out;
  out.outcome.n = n;
  out.outcome.k = k;
  std::set<DegreeSequence> minimizers;
  for (const auto& sizes : all_sizes) {
    FreeParts parts(sizes, grid.choices);
    for (const auto& c3 : parts.b3)
      for (const auto& c24 : parts.b2b4)
        for (const auto& c45 : parts.b4b5)
          for (const auto& c15 : parts.b1b5) {
            BlockFamilySpec spec{sizes, c3, c24, c45, c15};
            auto seq = degree_sequence_of(build_block_graph(spec));
            const Count h = h_k_sequence(seq, k);
            ++out.outcome.nodes_visited;
            auto& best = out.outcome.min_h;
            if (!best || h < *best) {
              best = h;
              out.best = spec;
              minimizers.clear();
            }
            if (h == *best) {
              minimizers.insert(std::move(seq));
              if (minimizers.size() > grid.witness_limit) minimizers.erase(std::prev(minimizers.end()));
            }
          }
  }
  out.outcome.witnesses.assign(minimizers.begin(), minimizers.end());
  out.outcome.exhausted = true;
  out.outcome.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return out;
}

}  // namespace spread
