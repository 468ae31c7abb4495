#include <doctest.h>

#include <algorithm>
#include <set>

#include "trispectra/error.hpp"
#include "trispectra/io.hpp"
#include "trispectra/triangulation.hpp"
#include "trispectra/verify.hpp"

using namespace trispectra;

TEST_CASE("R_1(K2) is K3 with node 3 generated by edge {1,2}") {
  const auto tri = q_triangulate(builtin_graph("k2"), 1);
  CHECK(tri.graph.node_count() == 3);
  CHECK(tri.graph.edges() == builtin_graph("k3").edges());
  CHECK(tri.is_new(3));
  CHECK(tri.origin(3) == NewNodeOrigin{1, 1});
  CHECK(tri.generator(3) == Edge{1, 2});
}

TEST_CASE("R_1(K3): 6 nodes, 9 edges, old degree 4, new degree 2") {
  const auto tri = q_triangulate(builtin_graph("k3"), 1);
  CHECK(tri.graph.node_count() == 6);
  CHECK(tri.graph.edge_count() == 9);
  for (int i = 1; i <= 3; ++i) CHECK(tri.graph.degree(i) == 4);
  for (int i = 4; i <= 6; ++i) CHECK(tri.graph.degree(i) == 2);
}

TEST_CASE("R_2(K2): 4 nodes, 5 edges") {
  const auto tri = q_triangulate(builtin_graph("k2"), 2);
  CHECK(tri.graph.node_count() == 4);
  CHECK(tri.graph.edge_count() == 5);
  CHECK(tri.new_node(1, 2) == 4);
  CHECK(tri.layer(2) == std::vector<int>{4});
}

TEST_CASE("q < 1 is rejected") {
  CHECK_THROWS_AS(q_triangulate(builtin_graph("k3"), 0), Error);
  try {
    q_triangulate(builtin_graph("k3"), 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidQ);
  }
}

TEST_CASE("iterate_triangulation") {
  CHECK(iterate_triangulation(builtin_graph("k3"), 2, 0).empty());

  const auto k2 = iterate_triangulation(builtin_graph("k2"), 1, 1);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].graph.edges() == builtin_graph("k3").edges());

  // Two steps from K3 with q = 1: 6/9 after one step, then 6 + 9 = 15 nodes.
  const auto chain = iterate_triangulation(builtin_graph("k3"), 1, 2);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].graph.node_count() == 6);
  CHECK(chain[0].graph.edge_count() == 9);
  CHECK(chain[1].graph.node_count() == 15);
  CHECK(chain[1].graph.edge_count() == 27);
  CHECK(predicted_counts(3, 3, 1, 2) == GraphCounts{15, 27});
}

TEST_CASE("predicted_counts") {
  CHECK(predicted_counts(3, 3, 1, 1) == GraphCounts{6, 9});
  CHECK(predicted_counts(7, 11, 2, 0) == GraphCounts{7, 11});
  CHECK(predicted_counts(3, 3, 3, 2) == GraphCounts{75, 147});
  const auto built = iterate_triangulation(builtin_graph("k3"), 3, 2).back().graph;
  CHECK(built.node_count() == 75);
  CHECK(built.edge_count() == 147);
  CHECK_THROWS_AS(predicted_counts(3, 3, 3, 40), Error);
}

TEST_CASE("structural invariants on random graphs") {
  for (const Graph& g : random_corpus(3, 40, 10)) {
    for (int q = 1; q <= 3; ++q) {
      CAPTURE(describe_graph(g));
      CAPTURE(q);
      const auto tri = q_triangulate(g, q);
      const int n = g.node_count();
      const int m = g.edge_count();
      CHECK(tri.graph.node_count() == n + m * q);
      CHECK(tri.graph.edge_count() == m * (2 * q + 1));
      const auto counts = predicted_counts(n, m, q, 1);
      CHECK(counts.nodes == static_cast<std::uint64_t>(tri.graph.node_count()));
      CHECK(counts.edges == static_cast<std::uint64_t>(tri.graph.edge_count()));

      for (int i = 1; i <= n; ++i) CHECK(tri.graph.degree(i) == (q + 1) * g.degree(i));
      for (const Edge& e : g.edges()) CHECK(tri.graph.has_edge(e.u, e.v));

      std::set<std::pair<int, int>> seen;
      for (int x = n + 1; x <= tri.graph.node_count(); ++x) {
        const auto origin = tri.origin(x);
        CHECK(x == n + (origin.copy - 1) * m + origin.edge);
        CHECK(tri.new_node(origin.edge, origin.copy) == x);
        CHECK(seen.emplace(origin.edge, origin.copy).second);
        const Edge& gen = tri.generator(x);
        const auto nb = tri.graph.neighbors(x);
        REQUIRE(nb.size() == 2);
        std::vector<int> sorted(nb.begin(), nb.end());
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{gen.u, gen.v});
      }
      CHECK(seen.size() == static_cast<std::size_t>(m * q));
    }
  }
}
