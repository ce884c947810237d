#include "spread/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spread/degseq.hpp"
#include "spread/extremal.hpp"
#include "spread/polynomials.hpp"

namespace spread {

DegreePartition DegreePartition::standard(const SpreadParams& p) {
  std::vector<int> widths(static_cast<std::size_t>(p.i), p.k);
  widths.push_back(p.t);
  return from_widths(p, std::move(widths));
}

DegreePartition DegreePartition::from_widths(const SpreadParams& p, std::vector<int> widths) {
  if (static_cast<int>(widths.size()) != p.i + 1)
    throw std::invalid_argument("partition needs i+1 = " + std::to_string(p.i + 1) + " intervals");
  int total = 0;
  for (int w : widths) {
    if (w < 1 || w > p.k) throw std::invalid_argument("interval widths must lie in [1, k]");
    total += w;
  }
  if (total != p.n) throw std::invalid_argument("interval widths must sum to n");
  DegreePartition out;
  out.params_ = p;
  out.widths_ = std::move(widths);
  out.starts_.assign(1, 0);
  for (int w : out.widths_) out.starts_.push_back(out.starts_.back() + w);
  return out;
}

int DegreePartition::group_of(int degree) const {
  if (degree < 0 || degree >= params_.n) throw std::out_of_range("degree outside [0, n-1]");
  auto it = std::upper_bound(starts_.begin(), starts_.end(), degree);
  return static_cast<int>(it - starts_.begin()) - 1;
}

std::vector<int> DegreePartition::counts(std::span<const int> degrees) const {
  std::vector<int> out(static_cast<std::size_t>(groups()), 0);
  for (int d : degrees) ++out[static_cast<std::size_t>(group_of(d))];
  return out;
}

GroupProfile GroupProfile::from_counts(const SpreadParams& p, std::vector<int> counts) {
  if (static_cast<int>(counts.size()) != p.i + 1)
    throw std::invalid_argument("profile needs i+1 group counts");
  if (std::accumulate(counts.begin(), counts.end(), 0) != p.n)
    throw std::invalid_argument("group counts must sum to n");
  GroupProfile out;
  out.params = p;
  out.x = std::move(counts);
  auto sorted = out.x;
  std::sort(sorted.begin(), sorted.end());
  out.p2 = sorted[0] - p.t;
  out.p1 = sorted[1] - p.t;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::precondition_failed: return "precondition_failed";
  }
  return "?";
}

bool check_chain_inequality(const ChainSplit& s) {
  if (s.a.size() != s.b.size() || s.a.size() < 3)
    throw std::invalid_argument("chain split needs a and b of equal length i+1 with i >= 2");
  const std::size_t i = s.a.size() - 1;
  if (s.a[0] != 0 || s.b[i] != 0) throw std::invalid_argument("chain split needs a_0 = b_i = 0");
  for (std::size_t j = 0; j <= i; ++j)
    if (sgn(s.a[j]) < 0 || sgn(s.b[j]) < 0) throw std::invalid_argument("chain split entries must be nonnegative");

  Rational lhs = 0;
  for (std::size_t j = 0; j < i; ++j) lhs += s.b[j] * s.a[j + 1];
  Rational rhs = (s.b[0] + s.a[0]) * (s.b[1] + s.a[1]);
  for (std::size_t j = 1; j < i; ++j) {
    Rational term = (s.b[j] + s.a[j]) * (s.b[j + 1] + s.a[j + 1]);
    if (term < rhs) rhs = term;
  }
  return lhs >= rhs;
}

Count binomial_theta(int x) { return static_cast<Count>(x) * (x - 1) / 2; }

bool check_convex_rearrangement(std::span<const int> xs, Count A, Count B, int k, const IntegerFunction& theta) {
  if (xs.empty()) throw std::invalid_argument("convex rearrangement needs at least one value");
  const auto m = static_cast<Count>(xs.size());
  const Count sum = std::accumulate(xs.begin(), xs.end(), Count{0});
  if (A + B != m) throw std::invalid_argument("A + B must equal the number of values");
  if (A * k + B * (k + 1) != sum) throw std::invalid_argument("A*k + B*(k+1) must equal the sum of the values");

  auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
  const int lo = std::min(*lo_it, k);
  const int hi = std::max(*hi_it, k + 1);
  for (int x = lo + 1; x < hi; ++x)
    if (theta(x + 1) - theta(x) < theta(x) - theta(x - 1))
      throw std::invalid_argument("theta is not convex on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  Count lhs = 0;
  for (int x : xs) lhs += theta(x);
  return lhs >= A * theta(k) + B * theta(k + 1);
}

Count doubled_group_pair_bound(const SpreadParams& p, int p1, int p2) {
  const poly::Point at{p.k, p.t, p1, p2};
  const bool narrow = p1 + p2 <= p.k - p.t;
  const auto deficit = narrow ? poly::evaluate(poly::kDeficitNarrow, at) : poly::evaluate(poly::kDeficitWide, at);
  return 2 * f0(p.n, p.k) - deficit;
}

Verdict check_group_pair_bound(const GroupProfile& prof) {
  const auto& p = prof.params;
  if (static_cast<int>(prof.x.size()) != p.i + 1 ||
      std::accumulate(prof.x.begin(), prof.x.end(), 0) != p.n)
    return Verdict::precondition_failed;
  if (prof.p2 < 0 || prof.p1 < prof.p2) return Verdict::precondition_failed;
  auto sorted = prof.x;
  std::sort(sorted.begin(), sorted.end());
  if (sorted[0] != p.t + prof.p2 || sorted[1] != p.t + prof.p1) return Verdict::precondition_failed;

  Count same = 0;
  for (int x : prof.x) same += binom2(x);
  return 2 * same >= doubled_group_pair_bound(p, prof.p1, prof.p2) ? Verdict::holds : Verdict::violated;
}

AvgGapCheck check_avg_degree_gap(const Graph& g, const DegreePartition& partition, int p2) {
  AvgGapCheck out;
  const auto& p = partition.params();
  if (g.order() != p.n || p2 < 0) return out;
  auto degs = g.degrees();
  auto counts = partition.counts(degs);
  for (int c : counts)
    if (c < p.t + p2) return out;

  const int top = partition.groups() - 1;
  Count low_sum = 0, high_sum = 0;
  for (int d : degs) {
    int grp = partition.group_of(d);
    if (grp == 0) low_sum += d;
    if (grp == top) high_sum += d;
  }
  out.low_mean = Rational(static_cast<long>(low_sum), static_cast<unsigned long>(counts.front()));
  out.high_mean = Rational(static_cast<long>(high_sum), static_cast<unsigned long>(counts.back()));
  out.low_mean.canonicalize();
  out.high_mean.canonicalize();
  out.limit = out.low_mean + static_cast<long>(p.k) * p.i - p2 - 1;
  out.verdict = out.high_mean <= out.limit ? Verdict::holds : Verdict::violated;
  return out;
}

Count cross_group_close_pairs(const Graph& g, const DegreePartition& partition) {
  auto degs = g.degrees();
  std::vector<int> grp;
  grp.reserve(degs.size());
  for (int d : degs) grp.push_back(partition.group_of(d));
  const int k = partition.params().k;
  Count total = 0;
  for (std::size_t u = 0; u < degs.size(); ++u)
    for (std::size_t v = u + 1; v < degs.size(); ++v)
      if (grp[u] != grp[v] && std::abs(degs[u] - degs[v]) < k) ++total;
  return total;
}

CrossBoundCheck check_cross_close_bound(const Graph& g, int k) {
  CrossBoundCheck out;
  const auto p = SpreadParams::make(g.order(), k);
  const auto partition = DegreePartition::standard(p);
  out.profile = GroupProfile::from_counts(p, partition.counts(g.degrees()));
  const Count p1 = out.profile.p1;
  const Count p2 = out.profile.p2;
  out.numerator = (p.t + p1) * (p.t + p2) * (p2 + 1);
  out.denominator = 2 * static_cast<Count>(k) - p2 - 3;
  if (p2 < 0 || out.denominator <= 0) return out;
  out.cross_close = cross_group_close_pairs(g, partition);
  out.verdict = out.cross_close * out.denominator >= out.numerator ? Verdict::holds : Verdict::violated;
  return out;
}

const char* to_string(PolyCheck c) {
  switch (c) {
    case PolyCheck::cross_wide: return "cross_wide";
    case PolyCheck::cross_narrow: return "cross_narrow";
    case PolyCheck::dk_at_top: return "dk_at_top";
    case PolyCheck::dk_at_bottom: return "dk_at_bottom";
  }
  return "?";
}

PolynomialGridReport check_polynomial_grid(int grid_max) {
  if (grid_max > 100000) throw std::invalid_argument("grid_max above 100000 would overflow 64-bit evaluation");
  PolynomialGridReport rep;
  rep.grid_max = grid_max;
  auto flag = [&](PolyCheck c, const poly::Point& at, std::int64_t value) {
    rep.violations.push_back({c, at.k, at.t, at.p1, at.p2, value});
  };
  for (std::int64_t k = 3; k <= grid_max; ++k) {
    for (std::int64_t t = (2 * k + 2) / 3; t < k; ++t) {
      for (std::int64_t p1 = 0; p1 <= k - t; ++p1) {
        for (std::int64_t p2 = 0; p2 <= p1; ++p2) {
          const poly::Point at{k, t, p1, p2};
          if (p1 + p2 >= k - t) {
            ++rep.wide_checked;
            if (auto v = poly::evaluate(poly::kCrossWide, at); v <= 0) flag(PolyCheck::cross_wide, at, v);

            ++rep.derivative_checked;
            const poly::Point top{t + p1 + p2, t, p1, p2};
            if (auto v = poly::evaluate_dk(poly::kCrossWide, top); v >= 0) flag(PolyCheck::dk_at_top, top, v);
            const poly::Point bottom{t + p1, t, p1, p2};
            if (auto v = poly::evaluate_dk(poly::kCrossWide, bottom); v >= 0) flag(PolyCheck::dk_at_bottom, bottom, v);
          }
          if (p1 + p2 <= k - t) {
            ++rep.narrow_checked;
            if (auto v = poly::evaluate(poly::kCrossNarrow, at); v <= 0) flag(PolyCheck::cross_narrow, at, v);
          }
        }
      }
    }
  }
  return rep;
}

ChainSplit random_chain_split(std::mt19937_64& rng, int max_i) {
  std::uniform_int_distribution<int> len(2, std::max(2, max_i));
  std::uniform_int_distribution<long> num(0, 20);
  std::uniform_int_distribution<unsigned long> den(1, 12);
  std::bernoulli_distribution zero(0.15);
  auto draw = [&] {
    if (zero(rng)) return Rational(0);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  const int i = len(rng);
  ChainSplit s;
  s.a.resize(static_cast<std::size_t>(i) + 1);
  s.b.resize(static_cast<std::size_t>(i) + 1);
  for (int j = 0; j <= i; ++j) {
    s.a[static_cast<std::size_t>(j)] = j == 0 ? Rational(0) : draw();
    s.b[static_cast<std::size_t>(j)] = j == i ? Rational(0) : draw();
  }
  return s;
}

Count ConvexInstance::theta(int x) const {
  if (table.empty()) return binomial_theta(x);
  const auto idx = static_cast<std::size_t>(x - table_lo);
  if (x < table_lo || idx >= table.size()) throw std::out_of_range("theta table queried outside its domain");
  return table[idx];
}

ConvexInstance random_convex_instance(std::mt19937_64& rng, bool random_table) {
  std::uniform_int_distribution<int> count(1, 10);
  std::uniform_int_distribution<int> value(-6, 24);
  std::uniform_int_distribution<int> shift(-3, 3);
  ConvexInstance inst;
  const int m = count(rng);
  for (int j = 0; j < m; ++j) inst.xs.push_back(value(rng));
  const Count sum = std::accumulate(inst.xs.begin(), inst.xs.end(), Count{0});
  // floor division so the offset below is symmetric around the mean
  Count mean = sum >= 0 ? sum / m : -((-sum + m - 1) / m);
  inst.k = static_cast<int>(mean + shift(rng));
  inst.B = sum - static_cast<Count>(m) * inst.k;
  inst.A = m - inst.B;
  if (random_table) {
    auto [lo_it, hi_it] = std::minmax_element(inst.xs.begin(), inst.xs.end());
    inst.table_lo = std::min(*lo_it, inst.k);
    const int hi = std::max(*hi_it, inst.k + 1);
    std::uniform_int_distribution<int> step(-10, 10);
    std::uniform_int_distribution<int> base(-50, 50);
    std::vector<Count> steps(static_cast<std::size_t>(hi - inst.table_lo));
    for (auto& s : steps) s = step(rng);
    std::sort(steps.begin(), steps.end());
    inst.table.push_back(base(rng));
    for (auto s : steps) inst.table.push_back(inst.table.back() + s);
  }
  return inst;
}

DegreePartition random_partition(const SpreadParams& p, std::mt19937_64& rng) {
  std::vector<int> widths(static_cast<std::size_t>(p.i) + 1, p.t);
  int spare = p.n - (p.i + 1) * p.t;
  std::uniform_int_distribution<int> pick(0, p.i);
  while (spare > 0) {
    auto& w = widths[static_cast<std::size_t>(pick(rng))];
    if (w < p.k) {
      ++w;
      --spare;
    }
  }
  return DegreePartition::from_widths(p, std::move(widths));
}

namespace {

void shuffle_edges(Graph& g, std::mt19937_64& rng) {
  auto edges = g.edges();
  if (edges.size() < 2) return;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  const std::size_t attempts = 10 * edges.size();
  for (std::size_t s = 0; s < attempts; ++s) {
    auto& e1 = edges[pick(rng)];
    auto& e2 = edges[pick(rng)];
    auto [a, b] = e1;
    auto [c, d] = e2;
    if (std::bernoulli_distribution(0.5)(rng)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    if (g.adjacent(a, d) || g.adjacent(c, b)) continue;
    g.remove_edge(a, b);
    g.remove_edge(c, d);
    g.add_edge(a, d);
    g.add_edge(c, b);
    e1 = {a, d};
    e2 = {c, b};
  }
}

}  // namespace

std::optional<Graph> sample_admissible_graph(const DegreePartition& partition, std::mt19937_64& rng,
                                             int max_tries) {
  const auto& p = partition.params();
  const int groups = partition.groups();
  std::uniform_int_distribution<int> pick_group(0, groups - 1);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<int> counts(static_cast<std::size_t>(groups), p.t);
    for (int spare = p.n - groups * p.t; spare > 0; --spare) ++counts[static_cast<std::size_t>(pick_group(rng))];

    std::vector<int> degs;
    std::vector<int> owner;
    for (int j = 0; j < groups; ++j) {
      std::uniform_int_distribution<int> in_group(partition.start(j), partition.start(j) + partition.width(j) - 1);
      for (int c = 0; c < counts[static_cast<std::size_t>(j)]; ++c) {
        degs.push_back(in_group(rng));
        owner.push_back(j);
      }
    }
    if (std::accumulate(degs.begin(), degs.end(), 0) % 2 != 0) {
      // Move one vertex by one degree without leaving its interval.
      std::uniform_int_distribution<std::size_t> pick_vertex(0, degs.size() - 1);
      bool fixed = false;
      for (int tries = 0; tries < 4 * p.n && !fixed; ++tries) {
        auto v = pick_vertex(rng);
        const int j = owner[v];
        const int lo = partition.start(j);
        const int hi = lo + partition.width(j) - 1;
        if (degs[v] + 1 <= hi) {
          ++degs[v];
          fixed = true;
        } else if (degs[v] - 1 >= lo) {
          --degs[v];
          fixed = true;
        }
      }
      if (!fixed) continue;
    }
    auto seq = DegreeSequence::from_unsorted(degs);
    auto g = try_realize(seq);
    if (!g) continue;
    shuffle_edges(*g, rng);
    return g;
  }
  return std::nullopt;
}

std::optional<LemmaSuite> parse_lemma_suite(std::string_view name) {
  if (name == "chain") return LemmaSuite::chain;
  if (name == "convex") return LemmaSuite::convex;
  if (name == "group-bound") return LemmaSuite::group_bound;
  if (name == "avg-gap") return LemmaSuite::avg_gap;
  if (name == "cross-bound") return LemmaSuite::cross_bound;
  if (name == "poly") return LemmaSuite::poly;
  return std::nullopt;
}

const char* to_string(LemmaSuite s) {
  switch (s) {
    case LemmaSuite::chain: return "chain";
    case LemmaSuite::convex: return "convex";
    case LemmaSuite::group_bound: return "group-bound";
    case LemmaSuite::avg_gap: return "avg-gap";
    case LemmaSuite::cross_bound: return "cross-bound";
    case LemmaSuite::poly: return "poly";
  }
  return "?";
}

namespace {

std::string describe_degrees(const Graph& g) {
  std::ostringstream out;
  auto d = degree_sequence_of(g);
  out << "n=" << g.order() << " degrees=[";
  for (int j = 0; j < d.size(); ++j) out << (j ? "," : "") << d[j];
  out << "]";
  return out.str();
}

SpreadParams random_params(std::mt19937_64& rng, int k_min, int k_max, int n_cap) {
  const int k = std::uniform_int_distribution<int>(k_min, k_max)(rng);
  const int n = std::uniform_int_distribution<int>(k + 1, std::max(k + 1, std::min(n_cap, 5 * k)))(rng);
  return SpreadParams::make(n, k);
}

void record(SuiteResult& r, Verdict v, const std::string& what) {
  if (v == Verdict::precondition_failed) {
    ++r.rejected;
    return;
  }
  ++r.checked;
  if (v == Verdict::violated) {
    ++r.violations;
    if (r.first_violation.empty()) r.first_violation = what;
  }
}

}  // namespace

SuiteResult run_lemma_suite(LemmaSuite which, std::uint64_t trials, std::uint64_t seed, int grid_max) {
  SuiteResult r;
  r.lemma = to_string(which);
  std::mt19937_64 rng(seed);

  if (which == LemmaSuite::poly) {
    auto rep = check_polynomial_grid(grid_max);
    r.trials = r.checked = rep.wide_checked + rep.narrow_checked + rep.derivative_checked;
    r.violations = rep.violations.size();
    if (!rep.violations.empty()) {
      const auto& v = rep.violations.front();
      std::ostringstream out;
      out << to_string(v.check) << " at k=" << v.k << " t=" << v.t << " p1=" << v.p1 << " p2=" << v.p2
          << " value=" << v.value;
      r.first_violation = out.str();
    }
    return r;
  }

  r.trials = trials;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    switch (which) {
      case LemmaSuite::chain: {
        auto s = random_chain_split(rng, 10);
        bool ok = check_chain_inequality(s);
        std::ostringstream out;
        if (!ok) {
          out << "a=[";
          for (auto& x : s.a) out << x << ' ';
          out << "] b=[";
          for (auto& x : s.b) out << x << ' ';
          out << "]";
        }
        record(r, ok ? Verdict::holds : Verdict::violated, out.str());
        break;
      }
      case LemmaSuite::convex: {
        auto inst = random_convex_instance(rng, trial % 2 == 1);
        bool ok = check_convex_rearrangement(inst.xs, inst.A, inst.B, inst.k,
                                             [&](int x) { return inst.theta(x); });
        record(r, ok ? Verdict::holds : Verdict::violated,
               "k=" + std::to_string(inst.k) + " A=" + std::to_string(inst.A) + " B=" + std::to_string(inst.B));
        break;
      }
      case LemmaSuite::group_bound: {
        auto p = random_params(rng, 1, 12, 72);
        std::vector<int> counts(static_cast<std::size_t>(p.i) + 1, p.t);
        std::uniform_int_distribution<int> pick(0, p.i);
        for (int spare = p.n - (p.i + 1) * p.t; spare > 0; --spare) ++counts[static_cast<std::size_t>(pick(rng))];
        auto prof = GroupProfile::from_counts(p, counts);
        record(r, check_group_pair_bound(prof),
               "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k));
        break;
      }
      case LemmaSuite::avg_gap: {
        auto p = random_params(rng, 2, 10, 40);
        auto partition = trial % 2 == 0 ? DegreePartition::standard(p) : random_partition(p, rng);
        auto g = sample_admissible_graph(partition, rng);
        if (!g) {
          ++r.rejected;
          break;
        }
        auto counts = partition.counts(g->degrees());
        const int slack = *std::min_element(counts.begin(), counts.end()) - p.t;
        const int p2 = std::uniform_int_distribution<int>(0, slack)(rng);
        record(r, check_avg_degree_gap(*g, partition, p2).verdict, describe_degrees(*g));
        break;
      }
      case LemmaSuite::cross_bound: {
        auto p = random_params(rng, 2, 10, 40);
        auto g = sample_admissible_graph(DegreePartition::standard(p), rng);
        if (!g) {
          ++r.rejected;
          break;
        }
        record(r, check_cross_close_bound(*g, p.k).verdict, describe_degrees(*g) + " k=" + std::to_string(p.k));
        break;
      }
      case LemmaSuite::poly: break;
    }
  }
  return r;
}

}  // namespace spread
