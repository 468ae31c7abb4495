#pragma once

#include <cstdint>
#include <vector>

#include "trispectra/graph.hpp"

namespace trispectra {

/// Generator of a node added by q-triangulation: the base edge it spans
/// (1-based edge index) and which of the q copies it is (1-based).
struct NewNodeOrigin {
  int edge = 0;
  int copy = 0;

  friend bool operator==(const NewNodeOrigin&, const NewNodeOrigin&) = default;
};

/// R_q(G) together with the provenance of every new node.
///
/// Old nodes keep their ids 1..n. The node generated by edge e in copy f
/// gets id n + (f - 1) m + e, so copy f occupies the contiguous layer
/// n + (f - 1) m + 1 .. n + f m and the adjacency matrix has the block
/// shape [A B ... B; B^T 0 ...; ...].
struct TriangulationResult {
  Graph base;
  Graph graph;
  int q = 0;

  bool is_new(int node) const { return node > base.node_count(); }
  NewNodeOrigin origin(int node) const;
  const Edge& generator(int node) const { return base.edge(origin(node).edge); }
  int new_node(int edge, int copy) const;

  /// New nodes of copy layer f, ascending.
  std::vector<int> layer(int copy) const;
};

TriangulationResult q_triangulate(const Graph& g, int q);

/// Element j holds R_{q,j+1}(G); empty when k == 0.
std::vector<TriangulationResult> iterate_triangulation(const Graph& g, int q, int k);

struct GraphCounts {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;

  friend bool operator==(const GraphCounts&, const GraphCounts&) = default;
};

/// Node and edge counts of R_{q,k}(G) from those of G. Throws
/// ErrorKind::Overflow when a count does not fit in 64 bits.
GraphCounts predicted_counts(std::uint64_t n, std::uint64_t m, int q, int k);

}  // namespace trispectra
