#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spread/cli.hpp"
#include "spread/extremal.hpp"
#include "spread/graph_io.hpp"

using namespace spread;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "spread_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("f0 command") {
  auto r = run({"f0", "--n", "10", "--k", "2"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out == "6\n");
  CHECK(run({"f0", "--n", "5", "--k", "5"}).status == cli::kExitUsage);
  CHECK(run({"f0", "--n", "5"}).status == cli::kExitUsage);
  CHECK(run({"bogus"}).status == cli::kExitUsage);
  CHECK(run({}).status == cli::kExitUsage);
}

TEST_CASE("construct output formats") {
  auto r = run({"construct", "--n", "7", "--k", "3", "--format", "graph6"});
  REQUIRE(r.status == 0);
  auto g = from_graph6(r.out);
  CHECK(degree_sequence_of(g) == DegreeSequence({6, 6, 6, 3, 3, 3, 3}));

  auto j = nlohmann::json::parse(run({"construct", "--n", "12", "--k", "3", "--format", "json"}).out);
  CHECK(j["group_sizes"] == std::vector<int>{2, 3, 4, 3});
  CHECK(j["f0"] == 13);
  CHECK(j["h_k"] == 13);
  CHECK(from_graph6(j["graph6"].get<std::string>()) == construct_extremal(12, 3));

  CHECK(from_edge_list(run({"construct", "--n", "9", "--k", "2", "--format", "edges"}).out) == construct_extremal(9, 2));
  CHECK(run({"construct", "--n", "5", "--k", "2", "--format", "dot"}).out.rfind("graph ", 0) == 0);
  CHECK(run({"construct", "--n", "5", "--k", "2", "--format", "png"}).status == cli::kExitUsage);
}

TEST_CASE("construct piped into hk reproduces f0") {
  for (int n = 2; n <= 100; ++n)
    for (int k = 1; k < n; ++k) {
      auto c = run({"construct", "--n", std::to_string(n), "--k", std::to_string(k), "--format", "graph6"});
      auto h = run({"hk", "--k", std::to_string(k), "--format", "graph6"}, c.out);
      if (h.status != 0 || h.out != std::to_string(f0(n, k)) + "\n") FAIL("n=" << n << " k=" << k);
      if (from_graph6(c.out) != construct_extremal(n, k)) FAIL("graph6 mismatch n=" << n << " k=" << k);
    }
}

TEST_CASE("hk json and edge input") {
  auto r = run({"hk", "--k", "2", "--format", "edges", "--json"}, "# n 4\n0 1\n");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["h_k"] == 6);
  CHECK(j["f0"] == f0(4, 2));
  CHECK(j["close_clique"].size() == 3);
  CHECK(run({"hk", "--k", "2", "--format", "graph6"}, "!!!\n").status == cli::kExitUsage);

  auto path = scratch("k4.g6");
  std::ofstream(path) << "C~\n";
  CHECK(run({"hk", "--k", "1", "--input", path.string()}).out == "6\n");
}

TEST_CASE("realize command") {
  auto r = run({"realize", "--degrees", "2,2,2", "--format", "graph6"});
  CHECK(r.status == 0);
  CHECK(r.out == "Bw\n");
  auto j = nlohmann::json::parse(run({"realize", "--degrees", "1,4,2,2,3", "--format", "json"}).out);
  CHECK(j["degrees"] == std::vector<int>{4, 3, 2, 2, 1});
  CHECK(j["graphical"] == true);
  CHECK(run({"realize", "--degrees", "2,2,1"}).status == cli::kExitUsage);
  CHECK(run({"realize", "--degrees", "1,x"}).status == cli::kExitUsage);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--n-max", "12"});
  REQUIRE(r.status == cli::kExitOk);
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "n,k,f0,min_h,holds,nodes,ms");
  int count = 0;
  while (std::getline(rows, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cells.push_back(c);
    REQUIRE(cells.size() >= 5);
    CHECK(cells[2] == cells[3]);
    CHECK(cells[4] == "true");
    ++count;
  }
  CHECK(count == 66);

  CHECK(run({"verify", "--n-max", "9"}).out == run({"verify", "--n-max", "9", "--parallel", "4"}).out);

  auto limited = run({"verify", "--n-max", "11", "--node-limit", "10", "--csv", scratch("partial.csv").string()});
  CHECK(limited.status == cli::kExitOk);
  auto summary = nlohmann::json::parse(limited.out);
  CHECK(summary["complete"] == false);
  CHECK(summary["counterexamples"] == 0);

  CHECK(run({"verify", "--n-max", "1"}).status == cli::kExitUsage);
  CHECK(run({"verify", "--n-max", "8", "--resume"}).status == cli::kExitUsage);
}

TEST_CASE("verify json file and resume") {
  auto json_path = scratch("v.json");
  auto csv_path = scratch("v.csv");
  std::filesystem::remove(csv_path);
  auto r = run({"verify", "--n-max", "8", "--json", json_path.string(), "--csv", csv_path.string()});
  REQUIRE(r.status == 0);
  std::ifstream jf(json_path);
  auto doc = nlohmann::json::parse(jf);
  CHECK(doc["entries"].size() == 28);
  CHECK(doc["all_hold"] == true);

  auto again = run({"verify", "--n-max", "9", "--csv", csv_path.string(), "--resume"});
  CHECK(again.status == 0);
  std::ifstream cf(csv_path);
  std::string line;
  int rows = 0;
  while (std::getline(cf, line)) rows += line.rfind("n,", 0) != 0;
  CHECK(rows == 36);
}

TEST_CASE("output directory environment variable") {
  auto dir = scratch("outdir");
  std::filesystem::remove_all(dir);
  ::setenv(cli::kOutputDirEnv, dir.string().c_str(), 1);
  auto r = run({"verify", "--n-max", "4", "--csv", "rows.csv"});
  ::unsetenv(cli::kOutputDirEnv);
  CHECK(r.status == 0);
  CHECK(std::filesystem::exists(dir / "rows.csv"));
}

TEST_CASE("family-search command") {
  auto r = run({"family-search", "--n", "5", "--k", "2", "--free-parts", "empty"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["min_h"].get<int>() >= 4);
  CHECK(j["nodes_visited"] == 126);
  CHECK(j["family_min_at_least_f0"] == true);

  auto fixed = nlohmann::json::parse(run({"family-search", "--n", "6", "--k", "2", "--sizes", "6,0,0,0,0"}).out);
  CHECK(fixed["min_h"] == 15);

  auto big = run({"family-search", "--n", "14", "--k", "3", "--free-parts", "empty,complete,threshold",
                  "--max-candidates", "1000"});
  CHECK(big.status == cli::kExitUsage);
  CHECK(big.err.find("candidates") != std::string::npos);
  CHECK(run({"family-search", "--n", "6", "--k", "2", "--free-parts", "sparse"}).status == cli::kExitUsage);
  CHECK(run({"family-search", "--n", "6", "--k", "2", "--sizes", "1,2,3"}).status == cli::kExitUsage);
}

TEST_CASE("lemma-check command") {
  auto r = run({"lemma-check", "--which", "poly", "--grid-max", "60"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lemma"] == "poly");
  CHECK(j["violations"] == 0);
  CHECK(j["grid_max"] == 60);

  auto all = run({"lemma-check", "--which", "all", "--trials", "300"});
  CHECK(all.status == 0);
  auto arr = nlohmann::json::parse(all.out);
  CHECK(arr.size() == 6);
  for (const auto& s : arr) CHECK(s["holds"] == true);

  auto a = run({"lemma-check", "--which", "chain", "--trials", "500", "--seed", "3"});
  auto b = run({"lemma-check", "--which", "chain", "--trials", "500", "--seed", "3"});
  CHECK(a.out == b.out);
  CHECK(run({"lemma-check", "--which", "nonsense"}).status == cli::kExitUsage);
}

TEST_CASE("version") {
  auto r = run({"--version"});
  CHECK(r.status == 0);
  CHECK(r.out.find("fnv1a64:") != std::string::npos);
  CHECK(r.out == cli::version_string() + "\n");
}
