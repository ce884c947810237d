#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spread/degseq.hpp"
#include "spread/extremal.hpp"
#include "spread/lemmas.hpp"

using namespace spread;

namespace {

ChainSplit split(std::vector<long> a, std::vector<long> b) {
  ChainSplit s;
  for (long x : a) s.a.emplace_back(x);
  for (long x : b) s.b.emplace_back(x);
  return s;
}

Rational chain_lhs(const ChainSplit& s) {
  Rational total = 0;
  for (std::size_t j = 0; j + 1 < s.a.size(); ++j) total += s.b[j] * s.a[j + 1];
  return total;
}

// Sum over same-group vertex pairs, counted directly from group labels.
Count same_group_pairs(const std::vector<int>& counts) {
  Count total = 0;
  for (int c : counts)
    for (int u = 0; u < c; ++u) total += u;
  return total;
}

}  // namespace

TEST_CASE("degree partitions") {
  auto p = SpreadParams::make(11, 3);
  auto std_part = DegreePartition::standard(p);
  CHECK(std_part.groups() == 4);
  CHECK(std_part.width(3) == 2);
  CHECK(std_part.group_of(0) == 0);
  CHECK(std_part.group_of(2) == 0);
  CHECK(std_part.group_of(3) == 1);
  CHECK(std_part.group_of(10) == 3);
  CHECK_THROWS(std_part.group_of(11));
  CHECK(std_part.counts(std::vector<int>{0, 9, 10, 4}) == std::vector<int>{1, 1, 0, 2});

  auto custom = DegreePartition::from_widths(p, {2, 3, 3, 3});
  CHECK(custom.group_of(2) == 1);
  CHECK_THROWS(DegreePartition::from_widths(p, {4, 3, 2, 2}));
  CHECK_THROWS(DegreePartition::from_widths(p, {3, 3, 3}));
  CHECK_THROWS(DegreePartition::from_widths(p, {3, 3, 3, 3}));

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 9)(rng);
    auto q = SpreadParams::make(std::uniform_int_distribution<int>(k + 1, 6 * k)(rng), k);
    auto r = random_partition(q, rng);
    int total = 0;
    for (int j = 0; j < r.groups(); ++j) {
      CHECK(r.width(j) >= q.t);
      CHECK(r.width(j) <= q.k);
      total += r.width(j);
    }
    CHECK(total == q.n);
  }
}

TEST_CASE("group profiles") {
  auto p = SpreadParams::make(12, 3);
  auto prof = GroupProfile::from_counts(p, {4, 3, 5, 0});
  CHECK(prof.p2 == -3);
  CHECK(prof.p1 == 0);
  auto even = GroupProfile::from_counts(p, {3, 3, 3, 3});
  CHECK(even.p1 == 0);
  CHECK(even.p2 == 0);
  CHECK_THROWS(GroupProfile::from_counts(p, {3, 3, 3}));
  CHECK_THROWS(GroupProfile::from_counts(p, {3, 3, 3, 4}));
}

TEST_CASE("chain inequality examples") {
  CHECK(chain_lhs(split({0, 1, 1}, {1, 1, 0})) == 2);
  CHECK(check_chain_inequality(split({0, 1, 1}, {1, 1, 0})));
  CHECK(check_chain_inequality(split({0, 0, 0, 0}, {0, 0, 0, 0})));
  CHECK_THROWS_AS(check_chain_inequality(split({0, 1}, {1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(check_chain_inequality(split({1, 1, 1}, {1, 1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(check_chain_inequality(split({0, 1, 1}, {1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(check_chain_inequality(split({0, -1, 1}, {1, 1, 0})), std::invalid_argument);
}

TEST_CASE("chain inequality against a direct evaluation") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20000; ++trial) {
    auto s = random_chain_split(rng, 10);
    const std::size_t i = s.a.size() - 1;
    CHECK(i >= 2);
    CHECK(i <= 10);
    Rational rhs = -1;
    for (std::size_t j = 0; j < i; ++j) {
      Rational term = (s.b[j] + s.a[j]) * (s.b[j + 1] + s.a[j + 1]);
      if (rhs < 0 || term < rhs) rhs = term;
    }
    const bool direct = chain_lhs(s) >= rhs;
    CHECK(direct);
    CHECK(check_chain_inequality(s) == direct);
    if (i == 2) CHECK(chain_lhs(s) >= std::min(s.b[0], s.a[2]) * (s.a[1] + s.b[1]));
  }
}

TEST_CASE("convex rearrangement examples") {
  const std::vector<int> tight{3, 3, 3, 4, 4};
  CHECK(check_convex_rearrangement(tight, 3, 2, 3));
  CHECK(check_convex_rearrangement(std::vector<int>{2, 4}, 2, 0, 3));
  CHECK(binomial_theta(2) + binomial_theta(4) == 7);

  // B < 0: xs = [4, 6] with k = 6 gives A + B = 2 and 6A + 7B = 10, so A = 4, B = -2.
  CHECK(check_convex_rearrangement(std::vector<int>{4, 6}, 4, -2, 6));
  CHECK(binomial_theta(4) + binomial_theta(6) >= 4 * binomial_theta(6) - 2 * binomial_theta(7));

  CHECK_THROWS_AS(check_convex_rearrangement(std::vector<int>{2, 4}, 1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_convex_rearrangement(std::vector<int>{2, 4}, 2, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(check_convex_rearrangement(std::vector<int>{}, 0, 0, 4), std::invalid_argument);
  auto concave = [](int x) { return Count{-x * x}; };
  CHECK_THROWS_AS(check_convex_rearrangement(std::vector<int>{2, 4}, 2, 0, 3, concave), std::invalid_argument);
}

TEST_CASE("convex rearrangement on random instances") {
  std::mt19937_64 rng(53);
  int negative_b = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    auto inst = random_convex_instance(rng, trial % 2 == 1);
    CHECK(inst.A + inst.B == static_cast<Count>(inst.xs.size()));
    CHECK(inst.A * inst.k + inst.B * (inst.k + 1) == std::accumulate(inst.xs.begin(), inst.xs.end(), Count{0}));
    auto theta = [&](int x) { return inst.theta(x); };
    Count lhs = 0;
    for (int x : inst.xs) lhs += theta(x);
    const bool direct = lhs >= inst.A * theta(inst.k) + inst.B * theta(inst.k + 1);
    CHECK(direct);
    CHECK(check_convex_rearrangement(inst.xs, inst.A, inst.B, inst.k, theta) == direct);
    if (inst.B < 0) ++negative_b;
  }
  CHECK(negative_b > 1000);
}

TEST_CASE("group pair bound") {
  auto g12 = GroupProfile::from_counts(SpreadParams::make(12, 3), blueprint(12, 3).group_sizes);
  CHECK(check_group_pair_bound(g12) == Verdict::precondition_failed);

  // every group of size t + p2, with p1 = p2
  for (int k = 2; k <= 12; ++k)
    for (int t = 1; t <= k; ++t)
      for (int i = 1; i <= 6; ++i)
        for (int p = 0; t + p <= k && (i + 1) * (t + p) <= k * i + t; ++p) {
          auto params = SpreadParams::make(k * i + t, k);
          std::vector<int> counts(static_cast<std::size_t>(i) + 1, t + p);
          counts.back() += params.n - (i + 1) * (t + p);
          auto prof = GroupProfile::from_counts(params, counts);
          if (prof.p2 != p || prof.p1 != p) continue;
          CHECK(check_group_pair_bound(prof) == Verdict::holds);
        }

  std::mt19937_64 rng(54);
  int held = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 12)(rng);
    auto p = SpreadParams::make(std::uniform_int_distribution<int>(k + 1, 8 * k + 1)(rng), k);
    std::vector<int> counts(static_cast<std::size_t>(p.i) + 1, p.t);
    std::uniform_int_distribution<int> pick(0, p.i);
    for (int spare = p.n - (p.i + 1) * p.t; spare > 0; --spare) ++counts[static_cast<std::size_t>(pick(rng))];
    auto prof = GroupProfile::from_counts(p, counts);
    auto v = check_group_pair_bound(prof);
    CHECK(v != Verdict::violated);
    if (v == Verdict::holds) {
      ++held;
      CHECK(2 * same_group_pairs(counts) >= doubled_group_pair_bound(p, prof.p1, prof.p2));
    }
  }
  CHECK(held > 5000);
}

TEST_CASE("average degree gap") {
  auto p = SpreadParams::make(6, 3);
  auto part = DegreePartition::standard(p);
  CHECK_FALSE(is_graphical(DegreeSequence({3, 3, 3, 0, 0, 0})));

  // triangle plus a perfect matching to three pendant vertices
  auto g = realize(DegreeSequence({3, 3, 3, 1, 1, 1}));
  auto r = check_avg_degree_gap(g, part, 0);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.low_mean == 1);
  CHECK(r.high_mean == 3);
  CHECK(r.limit == 3);

  CHECK(check_avg_degree_gap(g, part, 1).verdict == Verdict::precondition_failed);
  CHECK(check_avg_degree_gap(g, part, -1).verdict == Verdict::precondition_failed);
  CHECK(check_avg_degree_gap(Graph::complete(6), part, 0).verdict == Verdict::precondition_failed);

  std::mt19937_64 rng(55);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 9)(rng);
    auto q = SpreadParams::make(std::uniform_int_distribution<int>(k + 1, 4 * k)(rng), k);
    auto partition = trial % 2 ? random_partition(q, rng) : DegreePartition::standard(q);
    auto h = sample_admissible_graph(partition, rng);
    if (!h) continue;
    auto counts = partition.counts(h->degrees());
    for (int c : counts) CHECK(c >= q.t);
    const int slack = *std::min_element(counts.begin(), counts.end()) - q.t;
    for (int p2 = 0; p2 <= slack; ++p2) {
      auto res = check_avg_degree_gap(*h, partition, p2);
      CHECK(res.verdict == Verdict::holds);
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("cross-group close pairs") {
  for (int n = 4; n <= 30; ++n)
    for (int k = 2; k < n; ++k) {
      auto g = construct_extremal(n, k);
      auto c = check_cross_close_bound(g, k);
      CHECK(cross_group_close_pairs(g, DegreePartition::standard(SpreadParams::make(n, k))) == 0);
      if (blueprint(n, k).group_sizes[0] < SpreadParams::make(n, k).t)
        CHECK(c.verdict == Verdict::precondition_failed);
    }

  std::mt19937_64 rng(56);
  int checked = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 9)(rng);
    auto q = SpreadParams::make(std::uniform_int_distribution<int>(k + 1, 4 * k)(rng), k);
    auto h = sample_admissible_graph(DegreePartition::standard(q), rng);
    if (!h) continue;
    auto c = check_cross_close_bound(*h, k);
    CHECK(c.verdict != Verdict::violated);
    if (c.verdict == Verdict::holds) {
      ++checked;
      // direct recount by brute force over degree pairs
      auto degs = h->degrees();
      Count direct = 0;
      for (std::size_t u = 0; u < degs.size(); ++u)
        for (std::size_t v = u + 1; v < degs.size(); ++v) {
          const bool diff = std::min(degs[u] / k, q.i) != std::min(degs[v] / k, q.i);
          if (diff && std::abs(degs[u] - degs[v]) < k) ++direct;
        }
      CHECK(c.cross_close == direct);
      CHECK(c.cross_close * c.denominator >= c.numerator);
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("polynomial grid") {
  auto rep = check_polynomial_grid(60);
  CHECK(rep.violations.empty());
  CHECK(rep.wide_checked > 0);
  CHECK(rep.narrow_checked > 0);
  CHECK(rep.derivative_checked == rep.wide_checked);

  // count the grid independently
  std::uint64_t wide = 0, narrow = 0;
  for (int k = 3; k <= 60; ++k)
    for (int t = 1; t < k; ++t) {
      if (3 * t < 2 * k) continue;
      for (int p1 = 0; p1 <= k - t; ++p1)
        for (int p2 = 0; p2 <= p1; ++p2) {
          wide += p1 + p2 >= k - t;
          narrow += p1 + p2 <= k - t;
          if (p1 == 0 && p2 == 0) CHECK(p1 + p2 < k - t);
        }
    }
  CHECK(rep.wide_checked == wide);
  CHECK(rep.narrow_checked == narrow);
  CHECK_THROWS(check_polynomial_grid(100001));
}

TEST_CASE("randomized suites report no violations") {
  for (auto which : {LemmaSuite::chain, LemmaSuite::convex, LemmaSuite::group_bound, LemmaSuite::avg_gap,
                     LemmaSuite::cross_bound, LemmaSuite::poly}) {
    auto r = run_lemma_suite(which, 2000, 7, 30);
    INFO(r.lemma << ": " << r.first_violation);
    CHECK(r.violations == 0);
    CHECK(r.checked > 0);
    CHECK(r.checked + r.rejected == r.trials);
  }
  CHECK(parse_lemma_suite("group-bound") == LemmaSuite::group_bound);
  CHECK(parse_lemma_suite("avg-gap") == LemmaSuite::avg_gap);
  CHECK(parse_lemma_suite("cross-bound") == LemmaSuite::cross_bound);
  CHECK_FALSE(parse_lemma_suite("nope").has_value());

  auto a = run_lemma_suite(LemmaSuite::avg_gap, 300, 99, 0);
  auto b = run_lemma_suite(LemmaSuite::avg_gap, 300, 99, 0);
  CHECK(a.checked == b.checked);
  CHECK(a.rejected == b.rejected);
}
