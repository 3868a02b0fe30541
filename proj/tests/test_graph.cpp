#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wpc/constructions.hpp"
#include "wpc/graph.hpp"

using namespace wpc;

TEST_CASE("graph6 golden strings") {
  const Graph k4 = from_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(k4 == complete_graph(4));

  const Graph c5 = from_graph6("Dhc");
  CHECK(c5 == cycle_graph(5));

  const Graph empty = from_graph6("?");
  CHECK(empty.order() == 0);
  CHECK(empty.size() == 0);

  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6("Dhc\n") == c5);
}

TEST_CASE("graph6 decoder rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), Graph6Error);
  CHECK_THROWS_AS(from_graph6("!"), Graph6Error);      // header below 63
  CHECK_THROWS_AS(from_graph6("C"), Graph6Error);      // missing payload
  CHECK_THROWS_AS(from_graph6("C~~"), Graph6Error);    // payload too long
  CHECK_THROWS_AS(from_graph6("Dhd"), Graph6Error);    // padding bit set
  CHECK_THROWS_AS(from_graph6("D\x20" "c"), Graph6Error);  // payload byte below 63
  CHECK_THROWS_AS(from_graph6("`" + std::string(88, '?')), Graph6Error);  // n = 33
  CHECK_THROWS_AS(from_graph6("~?@A"), Graph6Error);   // long header form
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> order(0, 32);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 3000; ++i) {
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    const std::string s = to_graph6(g);
    REQUIRE(from_graph6(s) == g);
    CHECK(to_graph6(from_graph6(s)) == s);
  }
}

TEST_CASE("adjacency invariants and size under relabelling") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    int twice = 0;
    for (int v = 0; v < n; ++v) {
      CHECK_FALSE(g.adjacent(v, v));
      for (int w = 0; w < n; ++w) CHECK(g.adjacent(v, w) == g.adjacent(w, v));
      twice += g.degree(v);
    }
    CHECK(twice == 2 * g.size());
    const Graph h = g.permuted(oracle::random_permutation(n, rng));
    CHECK(h.size() == g.size());
  }
}

TEST_CASE("value edits return new graphs") {
  const Graph c5 = cycle_graph(5);
  const Graph chord = c5.with_edge(0, 2);
  CHECK(c5.size() == 5);
  CHECK(chord.size() == 6);
  CHECK(chord.without_edge(2, 0) == c5);
  CHECK(c5.complement().complement() == c5);
  CHECK(c5.complement() == cycle_graph(5).permuted(std::vector<int>{0, 2, 4, 1, 3}));
  CHECK_THROWS_AS(c5.with_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c5.with_edge(0, 5), std::out_of_range);
  CHECK_THROWS_AS(Graph(33), std::invalid_argument);

  const std::array<VertexSet, 2> lopsided{0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(2, lopsided), std::invalid_argument);

  const Graph rest = complete_graph(5).without_vertices(vertex_bit(1) | vertex_bit(3));
  CHECK(rest == complete_graph(3));
}

TEST_CASE("bipartition") {
  const auto k34 = bipartition(complete_bipartite(3, 4));
  REQUIRE(k34);
  CHECK(set_size(k34->part1) == 3);
  CHECK(set_size(k34->part2) == 4);
  CHECK(k34->balanced);

  CHECK_FALSE(bipartition(bt(8)));

  const auto c6 = bipartition(cycle_graph(6));
  REQUIRE(c6);
  CHECK(c6->part1 == 0b010101u);
  CHECK(c6->part2 == 0b101010u);

  // two components: each component's least vertex lands in part1
  const Graph two = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
  const auto bp = bipartition(two);
  REQUIRE(bp);
  CHECK(bp->part1 == (vertex_bit(0) | vertex_bit(2) | vertex_bit(4)));
  CHECK(bp->part2 == (vertex_bit(1) | vertex_bit(3)));
  CHECK(bp->balanced);

  CHECK_FALSE(bipartition(complete_bipartite(1, 4))->balanced);
  CHECK(bipartition(Graph(0)));
}

TEST_CASE("small and big vertices") {
  // n = 9: a vertex of degree 4 is small, degree 5 is big
  const Graph g = Graph::from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 6}});
  const auto dc = classify_vertices(g);
  CHECK(dc.threshold == 4);
  CHECK(dc.at(0) == VertexClass::Small);
  CHECK(dc.at(5) == VertexClass::Big);
  CHECK(dc.min_degree == 0);

  const auto k4 = classify_vertices(complete_graph(4));
  CHECK(k4.small == 0);
  CHECK(k4.min_degree == 3);

  CHECK_THROWS_AS(classify_vertices(Graph(0)), std::invalid_argument);

  // n = 2k+1 and n = 2k+2 share the threshold k
  std::mt19937_64 rng(3);
  for (int k = 1; k <= 10; ++k) {
    for (int n : {2 * k + 1, 2 * k + 2}) {
      const Graph h = oracle::random_graph(n, 0.5, rng);
      const auto c = classify_vertices(h);
      for (int v = 0; v < n; ++v) CHECK((c.at(v) == VertexClass::Small) == (h.degree(v) <= k));
    }
  }
}
