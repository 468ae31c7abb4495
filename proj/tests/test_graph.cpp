#include <doctest.h>

#include <random>

#include "trispectra/error.hpp"
#include "trispectra/graph.hpp"
#include "trispectra/io.hpp"
#include "trispectra/verify.hpp"

using namespace trispectra;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("build_graph: complete graphs and canonical order") {
  const Graph k3 = build_graph(3, {{2, 3}, {1, 3}, {2, 1}});
  CHECK(k3.node_count() == 3);
  CHECK(k3.edge_count() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(k3.degree(i) == 2);
  CHECK(k3.edge(1) == Edge{1, 2});
  CHECK(k3.edge(2) == Edge{1, 3});
  CHECK(k3.edge(3) == Edge{2, 3});
  CHECK(k3.edge_index(3, 1) == 2);
  CHECK_FALSE(k3.edge_index(1, 1).has_value());

  const Graph k2 = build_graph(2, {{1, 2}});
  CHECK(k2.degree(1) == 1);
  CHECK(k2.degree(2) == 1);
}

TEST_CASE("build_graph: validation errors") {
  CHECK(kind_of([] { build_graph(4, {{1, 2}, {3, 4}}); }) == ErrorKind::Disconnected);
  CHECK(kind_of([] { build_graph(3, {{1, 1}, {1, 2}, {2, 3}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { build_graph(3, {{1, 2}, {2, 1}, {2, 3}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { build_graph(0, {}); }) == ErrorKind::EmptyGraph);
  CHECK(kind_of([] { build_graph(1, {}); }) == ErrorKind::EmptyGraph);
  CHECK(kind_of([] { build_graph(2, {{1, 3}}); }) == ErrorKind::NodeOutOfRange);
  try {
    build_graph(4, {{1, 2}, {3, 4}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("Disconnected") != std::string::npos);
  }
}

TEST_CASE("is_bipartite") {
  const auto k2 = is_bipartite(builtin_graph("k2"));
  REQUIRE(k2.bipartite);
  CHECK(k2.coloring->first == std::vector<int>{1});
  CHECK(k2.coloring->second == std::vector<int>{2});
  CHECK_FALSE(is_bipartite(builtin_graph("k3")).bipartite);
  const auto c4 = is_bipartite(builtin_graph("cycle:4"));
  REQUIRE(c4.bipartite);
  CHECK(c4.coloring->first == std::vector<int>{1, 3});
  CHECK(c4.coloring->second == std::vector<int>{2, 4});
  CHECK(c4.coloring->same_part(1, 3));
  CHECK_FALSE(c4.coloring->same_part(1, 2));
}

TEST_CASE("incidence matrix") {
  const Eigen::MatrixXi b2 = incidence_matrix(builtin_graph("k2"));
  CHECK(b2.rows() == 2);
  CHECK(b2.cols() == 1);
  CHECK(b2(0, 0) == 1);
  CHECK(b2(1, 0) == 1);

  const Graph k3 = builtin_graph("k3");
  const Eigen::MatrixXi b3 = incidence_matrix(k3);
  CHECK(b3.colwise().sum() == Eigen::RowVectorXi::Constant(3, 2));
  const Eigen::MatrixXi expected = adjacency_matrix(k3) + 2 * Eigen::MatrixXi::Identity(3, 3);
  CHECK(b3 * b3.transpose() == expected);
}

TEST_CASE("normalized adjacency") {
  const Eigen::MatrixXd p3 = normalized_adjacency(builtin_graph("k3"));
  CHECK(p3(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p3(0, 0) == 0.0);
  CHECK(normalized_adjacency(builtin_graph("k2"))(0, 1) == doctest::Approx(1.0));
  const Eigen::MatrixXd ps = normalized_adjacency(builtin_graph("star:3"));
  for (int j = 1; j < 4; ++j) CHECK(ps(0, j) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("graph invariants on a random corpus") {
  const auto corpus = random_corpus(11, 60, 12);
  int bipartite = 0;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const Graph& g = corpus[idx];
    CAPTURE(describe_graph(g));
    const int n = g.node_count();
    const Eigen::MatrixXi a = adjacency_matrix(g);
    const Eigen::MatrixXi d = degree_matrix(g);
    const Eigen::MatrixXi b = incidence_matrix(g);
    CHECK(a == a.transpose());
    CHECK(a.diagonal().isZero());
    CHECK(d.diagonal().sum() == 2 * g.edge_count());
    CHECK((b.colwise().sum().array() == 2).all());
    CHECK(b * b.transpose() == a + d);

    const Eigen::MatrixXd t = transition_matrix(g);
    CHECK((t.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);
    const Eigen::VectorXd pi = stationary_distribution(g);
    CHECK((pi.transpose() * t - pi.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    const Eigen::MatrixXd p = normalized_adjacency(g);
    CHECK((p - p.transpose()).cwiseAbs().maxCoeff() == 0.0);

    const bool bip = is_bipartite(g).bipartite;
    if (idx % 3 == 0) CHECK(bip);
    bipartite += bip ? 1 : 0;
    CHECK(numerical_rank(b.cast<double>()) == (bip ? n - 1 : n));
  }
  CHECK(bipartite * 10 >= static_cast<int>(corpus.size()) * 3);
}
