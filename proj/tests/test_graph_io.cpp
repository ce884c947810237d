#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spread/extremal.hpp"
#include "spread/graph_io.hpp"

using namespace spread;

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(to_graph6(Graph(5)) == "D??");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(62)).substr(0, 1) == "}");
  CHECK(to_graph6(Graph(63)).substr(0, 4) == "~??~");
  CHECK(to_graph6(Graph(258)).substr(0, 4) == "~?CA");

  Graph p(3);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  // column-wise bits x01 x02 x12 = 1 0 1 -> 101000 = 40
  CHECK(to_graph6(p) == std::string{'B', static_cast<char>(40 + 63)});
}

TEST_CASE("graph6 decoding") {
  CHECK(from_graph6("Bw") == Graph::complete(3));
  CHECK(from_graph6("Bw\n") == Graph::complete(3));
  CHECK(from_graph6(">>graph6<<C~") == Graph::complete(4));
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Bww"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Bx"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6(std::string{'B', static_cast<char>(20)}), std::invalid_argument);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 300)(rng);
    Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    const auto text = to_graph6(g);
    CHECK(from_graph6(text) == g);
    CHECK(to_graph6(from_graph6(text)) == text);
  }
  for (int n = 2; n <= 40; ++n)
    for (int k = 1; k < n; ++k) CHECK(from_graph6(to_graph6(construct_extremal(n, k))) == construct_extremal(n, k));
}

TEST_CASE("edge list") {
  Graph g(4);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  const auto text = to_edge_list(g);
  CHECK(text == "# n 4\n0 3\n1 2\n");
  CHECK(from_edge_list(text) == g);
  CHECK(from_edge_list("0 1\n\n# comment\n1 2\n") == Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  CHECK(from_edge_list("# n 6\n").order() == 6);
  CHECK_THROWS(from_edge_list("0 x\n"));
  CHECK_THROWS(from_edge_list("1 1\n"));
  CHECK_THROWS(from_edge_list("# n 2\n0 5\n"));

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    Graph r = oracle::random_graph(std::uniform_int_distribution<int>(1, 50)(rng), 0.3, rng);
    CHECK(from_edge_list(to_edge_list(r)) == r);
  }
}

TEST_CASE("dot export") {
  Graph g(3);
  g.add_edge(0, 2);
  const auto dot = to_dot(g, "T");
  CHECK(dot.find("graph T {") != std::string::npos);
  CHECK(dot.find("0 -- 2") != std::string::npos);
  CHECK(dot.find("  1 [label=\"1 (d=0)\"]") != std::string::npos);
}
