#include "trispectra/transfer.hpp"

#include <algorithm>
#include <string>

namespace trispectra {

namespace {

void require_q(int q) {
  if (q < 1) throw Error(ErrorKind::InvalidQ, "q must be a positive integer, got " + std::to_string(q));
}

std::string describe(const NodeRef& ref) {
  if (const auto* old = std::get_if<OldNode>(&ref)) return "old node " + std::to_string(old->node);
  const auto& nw = std::get<NewNode>(ref);
  return "new node on {" + std::to_string(nw.s) + "," + std::to_string(nw.t) + "} copy " +
         std::to_string(nw.copy);
}

void validate(int q, const GraphSummary& g, const NodeRef& ref) {
  if (const auto* old = std::get_if<OldNode>(&ref)) {
    if (old->node < 1 || old->node > g.nodes) {
      throw Error(ErrorKind::InvalidNodeRef, describe(ref) + " outside 1.." + std::to_string(g.nodes));
    }
    return;
  }
  const auto& nw = std::get<NewNode>(ref);
  if (nw.s == nw.t) throw Error(ErrorKind::InvalidNodeRef, describe(ref) + ": endpoints coincide");
  const Edge key{std::min(nw.s, nw.t), std::max(nw.s, nw.t)};
  if (!std::binary_search(g.edge_list.begin(), g.edge_list.end(), key)) {
    throw Error(ErrorKind::InvalidNodeRef, describe(ref) + ": endpoints are not an edge of G");
  }
  if (nw.copy < 1 || nw.copy > q) {
    throw Error(ErrorKind::InvalidNodeRef, describe(ref) + ": copy outside 1.." + std::to_string(q));
  }
}

bool same_node(const NodeRef& a, const NodeRef& b) {
  if (a.index() != b.index()) return false;
  if (const auto* old = std::get_if<OldNode>(&a)) return old->node == std::get<OldNode>(b).node;
  const auto& x = std::get<NewNode>(a);
  const auto& y = std::get<NewNode>(b);
  return x.copy == y.copy && std::min(x.s, x.t) == std::min(y.s, y.t) &&
         std::max(x.s, x.t) == std::max(y.s, y.t);
}

const Eigen::MatrixXd& require_matrix(const std::optional<Eigen::MatrixXd>& m, const char* what) {
  if (!m) throw Error(ErrorKind::InvalidArgument, std::string("summary carries no ") + what + " matrix");
  return *m;
}

}  // namespace

GraphSummary summarize(const Graph& g, const MetricsReport& report) {
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.kemeny = report.kemeny;
  s.kirchhoff = report.indices.kirchhoff;
  s.additive = report.indices.additive;
  s.multiplicative = report.indices.multiplicative;
  s.edge_list = g.edges();
  s.hitting = report.hitting;
  s.resistance = report.resistance;
  return s;
}

GraphSummary summarize(const Graph& g, Route route) { return summarize(g, compute_metrics(g, route)); }

NodeRef node_ref(const TriangulationResult& tri, int node) {
  if (node < 1 || node > tri.graph.node_count()) {
    throw Error(ErrorKind::InvalidNodeRef,
                "node " + std::to_string(node) + " outside 1.." + std::to_string(tri.graph.node_count()));
  }
  if (!tri.is_new(node)) return OldNode{node};
  const auto origin = tri.origin(node);
  const Edge& e = tri.base.edge(origin.edge);
  return NewNode{e.u, e.v, origin.copy};
}

int node_id(const TriangulationResult& tri, const NodeRef& ref) {
  if (const auto* old = std::get_if<OldNode>(&ref)) {
    if (old->node < 1 || old->node > tri.base.node_count()) {
      throw Error(ErrorKind::InvalidNodeRef, describe(ref) + " is not a node of G");
    }
    return old->node;
  }
  const auto& nw = std::get<NewNode>(ref);
  const auto e = tri.base.edge_index(nw.s, nw.t);
  if (!e || nw.copy < 1 || nw.copy > tri.q) {
    throw Error(ErrorKind::InvalidNodeRef, describe(ref) + " does not exist in R_q(G)");
  }
  return tri.new_node(*e, nw.copy);
}

double transfer_hitting(int q, const GraphSummary& g, const NodeRef& from, const NodeRef& to) {
  require_q(q);
  validate(q, g, from);
  validate(q, g, to);
  if (same_node(from, to)) throw Error(ErrorKind::SameNode, "hitting time from " + describe(from) + " to itself");
  const Eigen::MatrixXd& t = require_matrix(g.hitting, "hitting");
  const auto T = [&](int a, int b) { return t(a - 1, b - 1); };
  const double m = g.edges;
  const double growth = 2.0 * q + 1.0;

  const auto* old_from = std::get_if<OldNode>(&from);
  const auto* old_to = std::get_if<OldNode>(&to);
  if (old_from && old_to) {
    return formula_term(FormulaTerm::HitOldOld, (4.0 * q + 2.0) / (q + 2.0) * T(old_from->node, old_to->node));
  }
  if (old_to) {
    const auto& x = std::get<NewNode>(from);
    const int j = old_to->node;
    return formula_term(FormulaTerm::HitNewOldConst, 1.0) +
           formula_term(FormulaTerm::HitNewOldScale, growth / (q + 2.0) * (T(x.s, j) + T(x.t, j)));
  }
  const auto& y = std::get<NewNode>(to);
  const int u = y.s;
  const int v = y.t;
  if (old_from) {
    const int j = old_from->node;
    return formula_term(FormulaTerm::HitOldNewConst, m * growth - 1.0) +
           formula_term(FormulaTerm::HitOldNewScale,
                        growth / (2.0 * (q + 2.0)) * (2.0 * (T(j, u) + T(j, v)) - (T(v, u) + T(u, v))));
  }
  const auto& x = std::get<NewNode>(from);
  const int s = x.s;
  const int tt = x.t;
  return formula_term(FormulaTerm::HitNewNewConst, m * growth) +
         formula_term(FormulaTerm::HitNewNewScale,
                      growth / (2.0 * (q + 2.0)) *
                          (T(s, u) + T(tt, u) + T(s, v) + T(tt, v) - (T(u, v) + T(v, u))));
}

double transfer_resistance(int q, const GraphSummary& g, const NodeRef& a, const NodeRef& b) {
  require_q(q);
  validate(q, g, a);
  validate(q, g, b);
  if (same_node(a, b)) return 0.0;
  const Eigen::MatrixXd& r = require_matrix(g.resistance, "resistance");
  const auto R = [&](int x, int y) { return r(x - 1, y - 1); };
  const double denom = 2.0 * (q + 2.0);

  const auto* old_a = std::get_if<OldNode>(&a);
  const auto* old_b = std::get_if<OldNode>(&b);
  if (old_a && old_b) {
    return formula_term(FormulaTerm::ResOldOld, 2.0 / (q + 2.0) * R(old_a->node, old_b->node));
  }
  if (old_a || old_b) {
    const int j = old_a ? old_a->node : old_b->node;
    const auto& x = std::get<NewNode>(old_a ? b : a);
    return formula_term(FormulaTerm::ResNewOldConst, 0.5) +
           formula_term(FormulaTerm::ResNewOldScale, (2.0 * R(x.s, j) + 2.0 * R(x.t, j) - R(x.s, x.t)) / denom);
  }
  const auto& x = std::get<NewNode>(a);
  const auto& y = std::get<NewNode>(b);
  return formula_term(FormulaTerm::ResNewNewConst, 1.0) +
         formula_term(FormulaTerm::ResNewNewScale,
                      (R(x.s, y.s) + R(x.t, y.s) + R(x.s, y.t) + R(x.t, y.t) - R(y.s, y.t) - R(x.s, x.t)) /
                          denom);
}

double transfer_kemeny(int q, const GraphSummary& g) {
  require_q(q);
  return transfer_kemeny_value<double>(q, g.nodes, g.edges, g.kemeny);
}

double transfer_multiplicative(int q, const GraphSummary& g) {
  require_q(q);
  return transfer_multiplicative_value<double>(q, g.nodes, g.edges, g.multiplicative);
}

double transfer_additive(int q, const GraphSummary& g) {
  require_q(q);
  return transfer_additive_value<double>(q, g.nodes, g.edges, g.additive, g.multiplicative);
}

double transfer_kirchhoff(int q, const GraphSummary& g) {
  require_q(q);
  return transfer_kirchhoff_value<double>(q, g.nodes, g.edges, g.kirchhoff, g.additive, g.multiplicative);
}

double old_new_resistance_sum(int q, const GraphSummary& g) {
  require_q(q);
  return old_new_resistance_sum_value<double>(q, g.nodes, g.edges, g.additive);
}

double new_pair_resistance_sum(int q, const GraphSummary& g) {
  require_q(q);
  return new_pair_resistance_sum_value<double>(q, g.nodes, g.edges, g.multiplicative);
}

}  // namespace trispectra
