#include "trispectra/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace trispectra {

namespace {

std::string edge_name(int a, int b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 1) {
    throw Error(ErrorKind::EmptyGraph, "graph needs at least one node, got n=" + std::to_string(n));
  }
  if (edges.empty()) {
    throw Error(ErrorKind::EmptyGraph, "graph on " + std::to_string(n) + " node(s) has no edges");
  }

  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorKind::NodeOutOfRange,
                  "edge " + edge_name(a, b) + " has an endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorKind::SelfLoop, "self-loop at node " + std::to_string(a));
    }
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge " + edge_name(dup->u, dup->v) + " appears more than once");
  }

  degrees_.assign(n, 0);
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    ++degrees_[e.u - 1];
    ++degrees_[e.v - 1];
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  std::vector<char> seen(n, 0);
  std::deque<int> frontier{1};
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    for (int w : adjacency_[u - 1]) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        frontier.push_back(w);
      }
    }
  }
  if (reached != n) {
    auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin() + 1;
    throw Error(ErrorKind::Disconnected,
                "node " + std::to_string(missing) + " is not reachable from node 1 (" +
                    std::to_string(reached) + " of " + std::to_string(n) + " nodes reached)");
  }
}

void Graph::check_node(int node) const {
  if (node < 1 || node > n_) {
    throw Error(ErrorKind::NodeOutOfRange,
                "node " + std::to_string(node) + " outside 1.." + std::to_string(n_));
  }
}

const Edge& Graph::edge(int index) const {
  if (index < 1 || index > edge_count()) {
    throw Error(ErrorKind::InvalidArgument,
                "edge index " + std::to_string(index) + " outside 1.." + std::to_string(edge_count()));
  }
  return edges_[index - 1];
}

std::optional<int> Graph::edge_index(int a, int b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin()) + 1;
}

int Graph::degree(int node) const {
  check_node(node);
  return degrees_[node - 1];
}

std::span<const int> Graph::neighbors(int node) const {
  check_node(node);
  return adjacency_[node - 1];
}

Eigen::VectorXd Graph::degree_vector() const {
  Eigen::VectorXd d(n_);
  for (int k = 0; k < n_; ++k) d(k) = degrees_[k];
  return d;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) { return Graph(n, edges); }

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> side(n, -1);
  std::deque<int> frontier{1};
  side[0] = 0;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    for (int w : g.neighbors(u)) {
      if (side[w - 1] < 0) {
        side[w - 1] = 1 - side[u - 1];
        frontier.push_back(w);
      } else if (side[w - 1] == side[u - 1]) {
        return {};
      }
    }
  }
  Bipartition parts;
  for (int k = 0; k < n; ++k) (side[k] == 0 ? parts.first : parts.second).push_back(k + 1);
  parts.side = std::move(side);
  return {true, std::move(parts)};
}

Eigen::MatrixXi adjacency_matrix(const Graph& g) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(g.node_count(), g.node_count());
  for (const Edge& e : g.edges()) {
    a(e.u - 1, e.v - 1) = 1;
    a(e.v - 1, e.u - 1) = 1;
  }
  return a;
}

Eigen::MatrixXi degree_matrix(const Graph& g) {
  Eigen::MatrixXi d = Eigen::MatrixXi::Zero(g.node_count(), g.node_count());
  for (int k = 1; k <= g.node_count(); ++k) d(k - 1, k - 1) = g.degree(k);
  return d;
}

Eigen::MatrixXi incidence_matrix(const Graph& g) {
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(g.node_count(), g.edge_count());
  for (int j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges()[j];
    b(e.u - 1, j) = 1;
    b(e.v - 1, j) = 1;
  }
  return b;
}

Eigen::MatrixXd transition_matrix(const Graph& g) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(g.node_count(), g.node_count());
  for (int i = 1; i <= g.node_count(); ++i) {
    const double w = 1.0 / g.degree(i);
    for (int j : g.neighbors(i)) t(i - 1, j - 1) = w;
  }
  return t;
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(g.node_count(), g.node_count());
  for (const Edge& e : g.edges()) {
    const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
    p(e.u - 1, e.v - 1) = w;
    p(e.v - 1, e.u - 1) = w;
  }
  return p;
}

Eigen::VectorXd stationary_distribution(const Graph& g) {
  return g.degree_vector() / (2.0 * g.edge_count());
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rel_cutoff * s(0);
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) rank += s(k) > cutoff ? 1 : 0;
  return rank;
}

}  // namespace trispectra
