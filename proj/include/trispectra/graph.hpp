#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "trispectra/error.hpp"

namespace trispectra {

/// Undirected edge between two 1-based node ids, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple connected undirected graph on nodes 1..n.
///
/// Edges are kept in canonical lexicographic order of (min, max); the
/// 1-based position of an edge in that order is its edge index. Construction
/// validates the graph and throws trispectra::Error naming the offending
/// item. Instances are immutable.
class Graph {
 public:
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int node_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Edge with 1-based index `index`.
  const Edge& edge(int index) const;

  /// 1-based index of edge {a, b}, if present.
  std::optional<int> edge_index(int a, int b) const;
  bool has_edge(int a, int b) const { return edge_index(a, b).has_value(); }

  int degree(int node) const;
  std::span<const int> neighbors(int node) const;

  /// Degrees as a vector; entry k belongs to node k + 1.
  Eigen::VectorXd degree_vector() const;

 private:
  void check_node(int node) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> adjacency_;
};

/// Validating constructor; same as Graph(n, edges).
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

/// Proper 2-coloring. side[k] is 0 when node k + 1 lies in the first part.
struct Bipartition {
  std::vector<int> first;
  std::vector<int> second;
  std::vector<int> side;

  bool same_part(int a, int b) const { return side[a - 1] == side[b - 1]; }
};

struct BipartiteCheck {
  bool bipartite = false;
  std::optional<Bipartition> coloring;
};

/// BFS 2-coloring starting from node 1, which always lands in `first`.
BipartiteCheck is_bipartite(const Graph& g);

// Matrix views. Row/column k corresponds to node k + 1 (and to edge k + 1
// for incidence columns). Integer views are exact.
Eigen::MatrixXi adjacency_matrix(const Graph& g);
Eigen::MatrixXi degree_matrix(const Graph& g);
Eigen::MatrixXi incidence_matrix(const Graph& g);
Eigen::MatrixXd transition_matrix(const Graph& g);
Eigen::MatrixXd normalized_adjacency(const Graph& g);

/// pi_i = d_i / 2m.
Eigen::VectorXd stationary_distribution(const Graph& g);

/// Number of singular values above rel_cutoff * sigma_max.
int numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff = 1e-9);

}  // namespace trispectra
