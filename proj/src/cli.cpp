#include "spread/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spread/degseq.hpp"
#include "spread/extremal.hpp"
#include "spread/graph_io.hpp"
#include "spread/lemmas.hpp"
#include "spread/polynomials.hpp"
#include "spread/report.hpp"
#include "spread/verifier.hpp"

namespace spread::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 20250816;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path output_path(const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') return std::filesystem::path(dir) / path;
  }
  return path;
}

std::ofstream open_output(const std::string& p, std::ios::openmode mode = std::ios::trunc) {
  auto path = output_path(p);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::out | mode);
  if (!f) throw UsageError("cannot open " + path.string() + " for writing");
  return f;
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: '" + cell + "'");
    }
  }
  return out;
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "graph6")
    out << to_graph6(g) << '\n';
  else if (format == "edges")
    out << to_edge_list(g);
  else if (format == "dot")
    out << to_dot(g);
  else
    throw UsageError("unknown graph format '" + format + "'");
}

Graph read_graph(std::istream& in, const std::string& input, const std::string& format) {
  std::string text;
  if (input.empty() || input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read " + input);
    text = read_all(f);
  }
  try {
    if (format == "graph6") {
      auto first = text.substr(0, text.find('\n'));
      return from_graph6(first);
    }
    if (format == "edges") return from_edge_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown input format '" + format + "'");
}

struct Options {
  int n = 0;
  int k = 0;
  std::string format;
  std::string input;
  std::string json_path;
  std::string csv_path;
  std::string degrees;
  std::string free_parts = "empty,complete";
  std::vector<std::string> sizes;
  std::string which;
  std::uint64_t trials = 0;
  std::uint64_t seed = kDefaultSeed;
  int grid_max = 60;
  std::uint64_t node_limit = 0;
  std::uint64_t max_candidates = 5'000'000;
  int parallel = 1;
  std::size_t witness_limit = 16;
  bool json_out = false;
  bool timing = false;
  bool resume = false;
};

int cmd_f0(const Options& o, std::ostream& out) {
  out << f0(o.n, o.k) << '\n';
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  auto g = construct_extremal(o.n, o.k);
  if (o.format == "json") {
    auto j = to_json(blueprint(o.n, o.k));
    j["graph6"] = to_graph6(g);
    j["h_k"] = h_k_sequence(degree_sequence_of(g), o.k);
    out << j.dump() << '\n';
  } else {
    write_graph(out, g, o.format);
  }
  return kExitOk;
}

int cmd_hk(const Options& o, std::istream& in, std::ostream& out) {
  auto g = read_graph(in, o.input, o.format);
  if (o.k < 1) throw UsageError("--k must be at least 1");
  const Count h = h_k_graph(g, o.k);
  if (!o.json_out) {
    out << h << '\n';
    return kExitOk;
  }
  auto seq = degree_sequence_of(g);
  nlohmann::json j{{"n", g.order()}, {"k", o.k}, {"h_k", h},
                   {"degrees", std::vector<int>(seq.values().begin(), seq.values().end())}};
  if (o.k < g.order()) {
    j["f0"] = f0(g.order(), o.k);
    j["close_clique"] = find_close_clique(g, o.k);
    j["at_least_f0"] = h >= f0(g.order(), o.k);
  }
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_realize(const Options& o, std::ostream& out) {
  auto values = parse_int_list(o.degrees);
  if (values.empty()) throw UsageError("--degrees needs at least one value");
  DegreeSequence seq;
  try {
    seq = DegreeSequence::from_unsorted(values);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto g = try_realize(seq);
  if (!g) throw UsageError("degree sequence is not graphical");
  if (o.format == "json") {
    nlohmann::json j{{"degrees", std::vector<int>(seq.values().begin(), seq.values().end())},
                     {"graphical", true},
                     {"graph6", to_graph6(*g)}};
    out << j.dump() << '\n';
  } else {
    write_graph(out, *g, o.format);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  if (o.k > 0) vo.k = o.k;
  if (o.node_limit > 0) vo.node_limit = o.node_limit;
  vo.parallel_width = o.parallel;
  vo.witness_limit = o.witness_limit;

  if (o.resume) {
    if (o.csv_path.empty()) throw UsageError("--resume needs --csv");
    std::ifstream prior(output_path(o.csv_path));
    if (prior) vo.resume_from = read_csv_entries(prior);
  }

  const bool stream_stdout = o.csv_path.empty() && o.json_path.empty();
  std::ofstream csv;
  if (!o.csv_path.empty()) {
    const bool appending = o.resume && !vo.resume_from.empty();
    csv = open_output(o.csv_path, appending ? std::ios::app : std::ios::trunc);
    if (!appending) csv << kCsvHeader << '\n' << std::flush;
  }
  if (stream_stdout) out << kCsvHeader << '\n' << std::flush;

  auto report = verify_range(o.n, vo, [&](const VerificationEntry& e) {
    auto row = to_csv_row(e, o.timing);
    if (csv.is_open()) csv << row << '\n' << std::flush;
    if (stream_stdout) out << row << '\n' << std::flush;
  });

  if (!o.json_path.empty()) {
    auto f = open_output(o.json_path);
    f << to_json(report, o.timing).dump(2) << '\n';
  }
  if (!stream_stdout) {
    nlohmann::json summary{{"n_max", report.n_max},
                           {"entries", report.totals.entries},
                           {"holds", report.totals.holds},
                           {"counterexamples", report.totals.counterexamples},
                           {"incomplete", report.totals.incomplete},
                           {"complete", report.complete()}};
    out << summary.dump() << '\n';
  }
  return report.totals.counterexamples > 0 ? kExitClaimFailed : kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  FamilyGrid grid;
  grid.choices.clear();
  std::stringstream ss(o.free_parts);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto kind = parse_part_kind(name);
    if (!kind) throw UsageError("unknown free part choice '" + name + "'");
    if (std::find(grid.choices.begin(), grid.choices.end(), *kind) == grid.choices.end()) grid.choices.push_back(*kind);
  }
  if (grid.choices.empty()) throw UsageError("--free-parts needs at least one choice");
  for (const auto& s : o.sizes) {
    auto v = parse_int_list(s);
    if (v.size() != 5) throw UsageError("--sizes takes five comma-separated block sizes");
    grid.sizes.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  grid.max_candidates = o.max_candidates;
  grid.witness_limit = o.witness_limit;

  FamilyOutcome result;
  try {
    result = search_block_family(o.n, o.k, grid);
  } catch (const FamilyGridTooLarge& e) {
    throw UsageError(std::string(e.what()) + "; narrow --sizes/--free-parts or raise --max-candidates");
  }
  auto j = to_json(result, o.timing);
  if (!o.json_path.empty()) {
    auto f = open_output(o.json_path);
    f << j.dump(2) << '\n';
  }
  out << j.dump() << '\n';
  const bool below = result.outcome.min_h && *result.outcome.min_h < f0(o.n, o.k);
  return below ? kExitClaimFailed : kExitOk;
}

int cmd_lemma(const Options& o, std::ostream& out) {
  std::vector<LemmaSuite> suites;
  if (o.which == "all") {
    suites = {LemmaSuite::chain, LemmaSuite::convex, LemmaSuite::group_bound,
              LemmaSuite::avg_gap, LemmaSuite::cross_bound, LemmaSuite::poly};
  } else {
    auto s = parse_lemma_suite(o.which);
    if (!s) throw UsageError("unknown lemma '" + o.which + "'");
    suites.push_back(*s);
  }
  if (o.grid_max < 3) throw UsageError("--grid-max must be at least 3");
  bool any_violation = false;
  nlohmann::json all = nlohmann::json::array();
  for (auto suite : suites) {
    auto r = run_lemma_suite(suite, o.trials, o.seed, o.grid_max);
    any_violation = any_violation || r.violations > 0;
    auto j = to_json(r);
    j["seed"] = o.seed;
    if (suite == LemmaSuite::poly) j["grid_max"] = o.grid_max;
    all.push_back(std::move(j));
  }
  auto doc = suites.size() == 1 ? all.front() : all;
  if (!o.json_path.empty()) {
    auto f = open_output(o.json_path);
    f << doc.dump(2) << '\n';
  }
  out << doc.dump() << '\n';
  return any_violation ? kExitClaimFailed : kExitOk;
}

}  // namespace

std::string version_string() {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(poly::table_checksum()));
  return std::string("spread ") + kVersion + " (formula table fnv1a64:" + buf + ")";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Close-pair spread toolkit: extremal constructions, exhaustive search and lemma checks"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print version and formula table checksum");
  Options o;

  auto* f0_cmd = app.add_subcommand("f0", "Print f0(n, k)");
  f0_cmd->add_option("--n", o.n, "Vertex count")->required();
  f0_cmd->add_option("--k", o.k, "Closeness threshold")->required();

  auto* construct = app.add_subcommand("construct", "Build the extremal graph for (n, k)");
  construct->add_option("--n", o.n)->required();
  construct->add_option("--k", o.k)->required();
  o.format = "json";
  construct->add_option("--format", o.format, "json, graph6, edges or dot")
      ->check(CLI::IsMember({"json", "graph6", "edges", "dot"}));

  auto* hk = app.add_subcommand("hk", "Count close pairs of a graph read from a file or stdin");
  hk->add_option("--k", o.k)->required();
  hk->add_option("--input", o.input, "Input path, '-' for stdin");
  std::string hk_format = "graph6";
  hk->add_option("--format", hk_format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
  hk->add_flag("--json", o.json_out, "Print a JSON summary instead of the bare count");

  auto* realize_cmd = app.add_subcommand("realize", "Havel-Hakimi realization of a degree sequence");
  realize_cmd->add_option("--degrees", o.degrees, "Comma-separated degrees")->required();
  std::string realize_format = "graph6";
  realize_cmd->add_option("--format", realize_format, "graph6, edges, dot or json")
      ->check(CLI::IsMember({"json", "graph6", "edges", "dot"}));

  auto* verify = app.add_subcommand("verify", "Exhaustive check of min h_k = f0 for all k < n <= n-max");
  verify->add_option("--n-max", o.n, "Largest vertex count")->required();
  verify->add_option("--k", o.k, "Restrict to one threshold");
  verify->add_option("--node-limit", o.node_limit, "Search node cap per (n, k); 0 means none");
  verify->add_option("--json", o.json_path, "Write the full report as JSON");
  verify->add_option("--csv", o.csv_path, "Stream rows to a CSV file");
  verify->add_option("--parallel", o.parallel, "Worker threads per search")->check(CLI::Range(1, 256));
  verify->add_option("--witness-limit", o.witness_limit, "Stored witnesses per entry");
  verify->add_flag("--resume", o.resume, "Reuse finished rows already in the --csv file");
  verify->add_flag("--timing", o.timing, "Record wall-clock times (output is no longer reproducible)");

  auto* family = app.add_subcommand("family-search", "Search the five-block candidate family");
  family->add_option("--n", o.n)->required();
  family->add_option("--k", o.k)->required();
  family->add_option("--free-parts", o.free_parts, "Comma-separated subset of empty, complete, threshold");
  family->add_option("--sizes", o.sizes, "Fixed block sizes b1,b2,b3,b4,b5 (repeatable)");
  family->add_option("--max-candidates", o.max_candidates, "Refuse grids larger than this");
  family->add_option("--witness-limit", o.witness_limit);
  family->add_option("--json", o.json_path, "Also write the result to a file");
  family->add_flag("--timing", o.timing);

  auto* lemma = app.add_subcommand("lemma-check", "Randomized and exhaustive lemma checks");
  lemma->add_option("--which", o.which, "chain, convex, group-bound, avg-gap, cross-bound, poly or all")->required();
  o.trials = 10000;
  lemma->add_option("--trials", o.trials, "Random instances per lemma");
  lemma->add_option("--seed", o.seed, "Random seed");
  lemma->add_option("--grid-max", o.grid_max, "Largest k for the polynomial grid");
  lemma->add_option("--json", o.json_path, "Also write the verdicts to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (show_version) {
    out << version_string() << '\n';
    return kExitOk;
  }

  try {
    if (f0_cmd->parsed()) return cmd_f0(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (hk->parsed()) {
      o.format = hk_format;
      return cmd_hk(o, in, out);
    }
    if (realize_cmd->parsed()) {
      o.format = realize_format;
      return cmd_realize(o, out);
    }
    if (verify->parsed()) return cmd_verify(o, out);
    if (family->parsed()) return cmd_family(o, out);
    if (lemma->parsed()) return cmd_lemma(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace spread::cli
