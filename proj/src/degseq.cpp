#include "spread/degseq.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace spread {

bool is_graphical(std::span<const int> d) {
  const auto n = static_cast<Count>(d.size());
  Count total = 0;
  for (int v : d) {
    if (v < 0 || v >= n) return false;
    total += v;
  }
  if (total % 2 != 0) return false;
  Count lhs = 0;
  for (Count r = 1; r <= n; ++r) {
    lhs += d[static_cast<std::size_t>(r - 1)];
    Count rhs = r * (r - 1);
    for (Count j = r; j < n; ++j) rhs += std::min<Count>(d[static_cast<std::size_t>(j)], r);
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphical(const DegreeSequence& d) { return is_graphical(d.values()); }

std::optional<Graph> try_realize(const DegreeSequence& d) {
  const int n = d.size();
  if (n == 0) return std::nullopt;
  Graph g(n);
  std::vector<int> residual(d.values().begin(), d.values().end());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int step = 0; step < n; ++step) {
    // Stable on index so equal residuals keep their original numbering.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
    });
    const int hub = order.front();
    const int need = residual[static_cast<std::size_t>(hub)];
    if (need == 0) break;
    if (need > static_cast<int>(order.size()) - 1) return std::nullopt;
    residual[static_cast<std::size_t>(hub)] = 0;
    for (int j = 1; j <= need; ++j) {
      const int v = order[static_cast<std::size_t>(j)];
      if (residual[static_cast<std::size_t>(v)] == 0) return std::nullopt;
      --residual[static_cast<std::size_t>(v)];
      g.add_edge(hub, v);
    }
    // The hub is finished; park it at the back so it is never picked again.
    std::rotate(order.begin(), order.begin() + 1, order.end());
    order.pop_back();
  }
  return g;
}

Graph realize(const DegreeSequence& d) {
  auto g = try_realize(d);
  if (!g) throw std::invalid_argument("degree sequence is not graphical");
  return *std::move(g);
}

void EnumerationConfig::validate() const {
  if (k < 1 || k >= n) throw std::invalid_argument("enumeration needs 1 <= k < n");
  if (n > 64) throw std::invalid_argument("enumeration supports n <= 64");
  if (bound && *bound < 0) throw std::invalid_argument("bound must be nonnegative");
  if (parallel_width < 1) throw std::invalid_argument("parallel_width must be >= 1");
}

Count forced_close_pairs(int slots, int max_value, int k) {
  if (slots <= 1) return 0;
  // Values in [0, max_value] fall into ceil((max_value+1)/k) windows of width k;
  // entries sharing a window are close, and the balanced split minimizes that.
  const Count windows = (static_cast<Count>(max_value) + k) / k;
  const Count base = slots / windows;
  const Count extra = slots % windows;
  return extra * binom2(base + 1) + (windows - extra) * binom2(base);
}

namespace {

constexpr Count kUnbounded = std::numeric_limits<Count>::max() / 4;
constexpr int kMaxDepth = 64;

struct SharedBudget {
  std::optional<std::uint64_t> limit;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> stop{false};

  bool charge() {
    if (!limit) return true;
    if (used.fetch_add(1, std::memory_order_relaxed) + 1 > *limit) {
      stop.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

struct SubtreeResult {
  bool found = false;
  Count best = 0;
  std::vector<DegreeSequence> witnesses;
  std::uint64_t nodes = 0;
  bool complete = true;
};

class Searcher {
 public:
  Searcher(const EnumerationConfig& cfg, SharedBudget& budget)
      : n_(cfg.n), k_(cfg.k), limit_(cfg.witness_limit), budget_(budget) {
    result_.best = cfg.bound.value_or(kUnbounded);
  }

  /// Charges a search node against the budget, then applies it.
  bool place(int pos, int value) {
    if (!budget_.charge()) {
      result_.complete = false;
      return false;
    }
    ++result_.nodes;
    return apply(pos, value);
  }

  /// Sets seq[pos] = value; returns false when the extended prefix is cut.
  bool apply(int pos, int value) {
    seq_[pos] = value;
    prefix_sum_[pos + 1] = prefix_sum_[pos] + value;
    Count fresh = 0;
    for (int j = pos - 1; j >= 0 && seq_[j] - value < k_; --j) ++fresh;
    close_[pos + 1] = close_[pos] + fresh;
    low_[pos + 1] = low_[pos] + (value < k_ ? 1 : 0);
    const Count remaining = n_ - pos - 1;
    // Unplaced entries lie in [0, value]: each is close to every placed entry below k.
    const Count forced = forced_close_pairs(static_cast<int>(remaining), value, k_) + remaining * low_[pos + 1];
    const Count lower = close_[pos + 1] + forced;
    if (lower > result_.best || (lower == result_.best && saturated())) return false;
    return prefix_may_be_graphical(pos + 1);
  }

  void descend(int pos) {
    if (pos == n_) {
      leaf();
      return;
    }
    const int cap = seq_[pos - 1];
    for (int v = 0; v <= cap; ++v) {
      if (budget_.stop.load(std::memory_order_relaxed)) {
        result_.complete = false;
        return;
      }
      if (place(pos, v)) descend(pos + 1);
    }
  }

  SubtreeResult take() && { return std::move(result_); }

  // Ties can no longer add a witness.
  bool saturated() const { return result_.found && result_.witnesses.size() >= limit_; }

 private:
  // Erdos-Gallai on the first `len` entries, with each missing entry replaced by
  // the largest value it may take (the last placed one). Exact when len == n.
  bool prefix_may_be_graphical(int len) const {
    const int missing = n_ - len;
    const Count last = seq_[len - 1];
    for (int r = 1; r <= len; ++r) {
      Count rhs = static_cast<Count>(r) * (r - 1) + missing * std::min<Count>(last, r);
      for (int j = r; j < len; ++j) rhs += std::min(seq_[j], r);
      if (prefix_sum_[r] > rhs) return false;
    }
    return true;
  }

  void leaf() {
    if (prefix_sum_[n_] % 2 != 0) return;
    const Count h = close_[n_];
    if (h > result_.best) return;
    if (!result_.found || h < result_.best) {
      result_.found = true;
      result_.best = h;
      result_.witnesses.clear();
    }
    if (result_.witnesses.size() < limit_)
      result_.witnesses.emplace_back(std::vector<int>(seq_.begin(), seq_.begin() + n_));
  }

  int n_;
  int k_;
  std::size_t limit_;
  SharedBudget& budget_;
  std::array<int, kMaxDepth> seq_{};
  std::array<Count, kMaxDepth + 1> prefix_sum_{};
  std::array<Count, kMaxDepth + 1> close_{};
  std::array<Count, kMaxDepth + 1> low_{};
  SubtreeResult result_;
};

}  // namespace

SearchOutcome minimize_hk(const EnumerationConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const int n = cfg.n;
  SharedBudget budget;
  budget.limit = cfg.node_limit;

  SearchOutcome out;
  out.n = n;
  out.k = cfg.k;

  // Depth-one prefixes are expanded here; each surviving (d0, d1) pair is a task.
  std::vector<std::pair<int, int>> tasks;
  bool driver_complete = true;
  std::uint64_t driver_nodes = 0;
  for (int d0 = 0; d0 < n; ++d0) {
    Searcher probe(cfg, budget);
    const bool alive = probe.place(0, d0);
    driver_nodes += std::move(probe).take().nodes;
    if (budget.stop.load()) {
      driver_complete = false;
      break;
    }
    if (alive)
      for (int d1 = 0; d1 <= d0; ++d1) tasks.emplace_back(d0, d1);
  }

  std::vector<SubtreeResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < tasks.size(); idx = next.fetch_add(1)) {
      Searcher s(cfg, budget);
      auto [d0, d1] = tasks[idx];
      if (s.apply(0, d0) && s.place(1, d1)) s.descend(2);
      results[idx] = std::move(s).take();
    }
  };
  const int width = std::max(1, std::min<int>(cfg.parallel_width, static_cast<int>(tasks.size())));
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(width));
    for (int w = 0; w < width; ++w) pool.emplace_back(worker);
  }

  bool complete = driver_complete;
  out.nodes_visited = driver_nodes;
  Count best = 0;
  bool found = false;
  for (const auto& r : results) {
    out.nodes_visited += r.nodes;
    complete = complete && r.complete;
    if (r.found && (!found || r.best < best)) {
      found = true;
      best = r.best;
    }
  }
  if (found) {
    out.min_h = best;
    for (auto& r : results) {
      if (!r.found || r.best != best) continue;
      for (auto& w : r.witnesses)
        if (out.witnesses.size() < cfg.witness_limit) out.witnesses.push_back(std::move(w));
    }
  }
  out.exhausted = complete && !budget.stop.load();
  out.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return out;
}

}  // namespace spread
