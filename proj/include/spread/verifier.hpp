#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spread/degseq.hpp"
#include "spread/graphcore.hpp"
#include "spread/lemmas.hpp"

namespace spread {

struct VerificationEntry {
  int n = 0;
  int k = 0;
  Count f0 = 0;
  SearchOutcome outcome;
  bool conjecture_holds = false;
};

struct VerificationTotals {
  std::size_t entries = 0;
  std::size_t holds = 0;
  std::size_t counterexamples = 0;
  std::size_t incomplete = 0;
  std::uint64_t nodes = 0;
};

struct VerificationReport {
  int n_max = 0;
  std::optional<int> k_filter;
  /// Sorted by (n, k).
  std::vector<VerificationEntry> entries;
  VerificationTotals totals;

  bool complete() const { return totals.incomplete == 0; }
  bool all_hold() const { return totals.holds == totals.entries; }
};

struct VerifyOptions {
  std::optional<int> k;
  std::optional<std::uint64_t> node_limit;
  int parallel_width = 1;
  std::size_t witness_limit = 16;
  /// Entries already computed (for instance read back from a CSV); matching (n, k) are reused.
  std::vector<VerificationEntry> resume_from;
};

/// Holds iff the search was exhausted and found nothing below f0.
bool conjecture_holds(const SearchOutcome& o, Count f0_value);

VerificationEntry verify_pair(int n, int k, const VerifyOptions& opts);

/// Every (n, k) with 1 <= k < n <= n_max (only k = opts.k when set), each
/// searched with bound f0(n, k). `on_entry` sees each entry as soon as it is done.
VerificationReport verify_range(int n_max, const VerifyOptions& opts,
                                const std::function<void(const VerificationEntry&)>& on_entry = {});

struct IntervalProfile {
  GroupProfile profile;
  /// Every interval holds at least t vertices.
  bool balanced = false;
};

IntervalProfile check_interval_profile(const Graph& g, int k);
IntervalProfile check_interval_profile(const Graph& g, const DegreePartition& partition);

// --- five-block family -----------------------------------------------------

enum class PartKind { empty, complete, threshold };

const char* to_string(PartKind kind);
std::optional<PartKind> parse_part_kind(std::string_view name);

struct PartChoice {
  PartKind kind = PartKind::empty;
  /// For threshold parts: local indices a, b are joined iff a + b >= parameter.
  int parameter = 0;

  bool operator==(const PartChoice&) const = default;
};

/// B1, B2 cliques; B4, B5 independent; (B1,B2), (B1,B3), (B1,B4), (B2,B3)
/// complete; (B3,B5), (B2,B5), (B3,B4) empty. The B3 interior and the pairs
/// (B2,B4), (B4,B5), (B1,B5) are free.
struct BlockFamilySpec {
  std::array<int, 5> sizes{};
  PartChoice b3_interior;
  PartChoice b2_b4;
  PartChoice b4_b5;
  PartChoice b1_b5;

  int order() const;
  bool operator==(const BlockFamilySpec&) const = default;
};

Graph build_block_graph(const BlockFamilySpec& spec);

struct FamilyGrid {
  /// Explicit block sizes; empty means every composition of n into five parts.
  std::vector<std::array<int, 5>> sizes;
  std::vector<PartKind> choices{PartKind::empty, PartKind::complete};
  std::uint64_t max_candidates = 5'000'000;
  std::size_t witness_limit = 16;
};

struct FamilyOutcome {
  /// Witnesses are the distinct minimizing degree sequences in lexicographic order;
  /// nodes_visited counts built graphs.
  SearchOutcome outcome;
  std::optional<BlockFamilySpec> best;
};

class FamilyGridTooLarge : public std::length_error {
 public:
  FamilyGridTooLarge(std::uint64_t estimate, std::uint64_t limit);
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

std::uint64_t estimate_family_size(int n, const FamilyGrid& grid);

/// Throws FamilyGridTooLarge when the grid exceeds grid.max_candidates.
FamilyOutcome search_block_family(int n, int k, const FamilyGrid& grid);

}  // namespace spread
