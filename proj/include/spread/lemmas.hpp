#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spread/graphcore.hpp"

namespace spread {

using Rational = mpq_class;

/// Consecutive intervals covering {0, ..., n-1}; group j is [start(j), start(j+1)).
class DegreePartition {
 public:
  /// i intervals of width k followed by one of width t.
  static DegreePartition standard(const SpreadParams& p);

  /// i+1 intervals of the given widths, each in [1, k], summing to n.
  static DegreePartition from_widths(const SpreadParams& p, std::vector<int> widths);

  const SpreadParams& params() const { return params_; }
  int groups() const { return static_cast<int>(widths_.size()); }
  int width(int j) const { return widths_[static_cast<std::size_t>(j)]; }
  int start(int j) const { return starts_[static_cast<std::size_t>(j)]; }
  int group_of(int degree) const;

  /// Number of degrees falling in each group.
  std::vector<int> counts(std::span<const int> degrees) const;

 private:
  SpreadParams params_;
  std::vector<int> widths_;
  std::vector<int> starts_;
};

/// Per-group vertex counts with p2 = (smallest) - t and p1 = (second smallest) - t.
struct GroupProfile {
  SpreadParams params;
  std::vector<int> x;
  int p2 = 0;
  int p1 = 0;

  /// Requires i+1 counts summing to n.
  static GroupProfile from_counts(const SpreadParams& p, std::vector<int> counts);
};

enum class Verdict { holds, violated, precondition_failed };

const char* to_string(Verdict v);

/// a_0 = 0 and b_i = 0; a and b have i+1 entries.
struct ChainSplit {
  std::vector<Rational> a;
  std::vector<Rational> b;
};

/// sum_{j<i} b_j a_{j+1} >= min_{j<i} (b_j + a_j)(b_{j+1} + a_{j+1}).
/// Throws std::invalid_argument for i < 2, negative entries, or nonzero boundary entries.
bool check_chain_inequality(const ChainSplit& s);

using IntegerFunction = std::function<Count(int)>;

/// theta(x) = x(x-1)/2 on all integers.
Count binomial_theta(int x);

/// sum theta(x) >= A*theta(k) + B*theta(k+1) whenever A + B = |xs| and
/// A*k + B*(k+1) = sum xs. theta must be convex on the range spanned by xs, k
/// and k+1. Throws std::invalid_argument when a constraint fails.
bool check_convex_rearrangement(std::span<const int> xs, Count A, Count B, int k,
                                const IntegerFunction& theta = binomial_theta);

/// Same-group pair count sum C(x_j, 2) against f0 minus the deficit polynomial
/// for the profile's branch of p1 + p2 versus k - t.
Verdict check_group_pair_bound(const GroupProfile& p);

/// Twice the lower bound on same-group pairs used by check_group_pair_bound.
Count doubled_group_pair_bound(const SpreadParams& p, int p1, int p2);

struct AvgGapCheck {
  Verdict verdict = Verdict::precondition_failed;
  Rational low_mean;
  Rational high_mean;
  Rational limit;
};

/// Mean degree of the top group against k*i + (mean of group 0) - p2 - 1.
/// Precondition: every group of `partition` holds at least t + p2 vertices.
AvgGapCheck check_avg_degree_gap(const Graph& g, const DegreePartition& partition, int p2);

struct CrossBoundCheck {
  Verdict verdict = Verdict::precondition_failed;
  GroupProfile profile;
  Count cross_close = 0;
  /// Required count is numerator / denominator.
  Count numerator = 0;
  Count denominator = 0;
};

/// Close pairs with endpoints in different groups of the standard partition,
/// against (t+p1)(t+p2)(p2+1) / (2k-p2-3). Preconditions: p2 >= 0 and 2k-p2-3 > 0.
CrossBoundCheck check_cross_close_bound(const Graph& g, int k);

Count cross_group_close_pairs(const Graph& g, const DegreePartition& partition);

enum class PolyCheck { cross_wide, cross_narrow, dk_at_top, dk_at_bottom };

const char* to_string(PolyCheck c);

struct PolyViolation {
  PolyCheck check;
  std::int64_t k, t, p1, p2;
  std::int64_t value;
};

struct PolynomialGridReport {
  int grid_max = 0;
  std::uint64_t wide_checked = 0;
  std::uint64_t narrow_checked = 0;
  std::uint64_t derivative_checked = 0;
  std::vector<PolyViolation> violations;
};

/// Over 3 <= k <= grid_max, ceil(2k/3) <= t < k, 0 <= p2 <= p1 <= k-t:
/// the wide polynomial > 0 when p1+p2 >= k-t, its k-derivative < 0 at
/// k = t+p1+p2 and k = t+p1, and the narrow polynomial > 0 when p1+p2 <= k-t.
PolynomialGridReport check_polynomial_grid(int grid_max);

// Instance generators shared by the randomized suites.

ChainSplit random_chain_split(std::mt19937_64& rng, int max_i);

struct ConvexInstance {
  std::vector<int> xs;
  Count A = 0;
  Count B = 0;
  int k = 0;
  /// Empty means binomial_theta; otherwise theta(x) = table[x - table_lo].
  std::vector<Count> table;
  int table_lo = 0;

  Count theta(int x) const;
};

ConvexInstance random_convex_instance(std::mt19937_64& rng, bool random_table);

/// Random graph whose degrees put at least t vertices in every group of
/// `partition`: group counts and in-group degrees are drawn at random, the
/// sequence is kept only if graphical, realized, then shuffled by
/// degree-preserving edge swaps. nullopt if `max_tries` draws all fail.
std::optional<Graph> sample_admissible_graph(const DegreePartition& partition, std::mt19937_64& rng,
                                             int max_tries = 200);

/// Random interval widths in [t, k] summing to n.
DegreePartition random_partition(const SpreadParams& p, std::mt19937_64& rng);

struct SuiteResult {
  std::string lemma;
  std::uint64_t trials = 0;
  std::uint64_t checked = 0;
  std::uint64_t rejected = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
};

enum class LemmaSuite { chain, convex, group_bound, avg_gap, cross_bound, poly };

std::optional<LemmaSuite> parse_lemma_suite(std::string_view name);
const char* to_string(LemmaSuite s);

/// Runs one randomized (or, for poly, exhaustive) suite. `grid_max` only affects poly.
SuiteResult run_lemma_suite(LemmaSuite which, std::uint64_t trials, std::uint64_t seed, int grid_max);

}  // namespace spread
