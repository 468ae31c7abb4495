#include "trispectra/triangulation.hpp"

#include <limits>
#include <string>
#include <utility>

namespace trispectra {

namespace {

void require_q(int q) {
  if (q < 1) throw Error(ErrorKind::InvalidQ, "q must be a positive integer, got " + std::to_string(q));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "node/edge count exceeds 64-bit range");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "node/edge count exceeds 64-bit range");
  }
  return out;
}

}  // namespace

NewNodeOrigin TriangulationResult::origin(int node) const {
  const int n = base.node_count();
  const int m = base.edge_count();
  if (node <= n || node > graph.node_count()) {
    throw Error(ErrorKind::InvalidArgument, "node " + std::to_string(node) + " is not a new node");
  }
  const int offset = node - n - 1;
  return {offset % m + 1, offset / m + 1};
}

int TriangulationResult::new_node(int edge, int copy) const {
  const int m = base.edge_count();
  if (edge < 1 || edge > m || copy < 1 || copy > q) {
    throw Error(ErrorKind::InvalidArgument,
                "no new node for edge " + std::to_string(edge) + ", copy " + std::to_string(copy));
  }
  return base.node_count() + (copy - 1) * m + edge;
}

std::vector<int> TriangulationResult::layer(int copy) const {
  std::vector<int> nodes;
  nodes.reserve(base.edge_count());
  for (int e = 1; e <= base.edge_count(); ++e) nodes.push_back(new_node(e, copy));
  return nodes;
}

TriangulationResult q_triangulate(const Graph& g, int q) {
  require_q(q);
  const int n = g.node_count();
  const int m = g.edge_count();
  const std::int64_t new_n = static_cast<std::int64_t>(n) + static_cast<std::int64_t>(m) * q;
  if (new_n > std::numeric_limits<int>::max()) {
    throw Error(ErrorKind::Overflow, "R_q(G) would have " + std::to_string(new_n) + " nodes");
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m) * (2 * q + 1));
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (int f = 1; f <= q; ++f) {
    for (int e = 1; e <= m; ++e) {
      const Edge& gen = g.edges()[e - 1];
      const int x = n + (f - 1) * m + e;
      edges.emplace_back(gen.u, x);
      edges.emplace_back(gen.v, x);
    }
  }
  return TriangulationResult{g, Graph(static_cast<int>(new_n), edges), q};
}

std::vector<TriangulationResult> iterate_triangulation(const Graph& g, int q, int k) {
  require_q(q);
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "iteration count must be non-negative");
  std::vector<TriangulationResult> steps;
  steps.reserve(k);
  for (int j = 0; j < k; ++j) {
    steps.push_back(q_triangulate(j == 0 ? g : steps.back().graph, q));
  }
  return steps;
}

GraphCounts predicted_counts(std::uint64_t n, std::uint64_t m, int q, int k) {
  require_q(q);
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "iteration count must be non-negative");
  std::uint64_t growth = 1;  // (2q+1)^k
  for (int j = 0; j < k; ++j) growth = checked_mul(growth, 2 * static_cast<std::uint64_t>(q) + 1);
  const std::uint64_t edges = checked_mul(growth, m);
  // (2q+1)^k - 1 is even, so the division is exact.
  const std::uint64_t nodes = checked_add(checked_mul(m, (growth - 1) / 2), n);
  return {nodes, edges};
}

}  // namespace trispectra
