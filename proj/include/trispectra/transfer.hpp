#pragma once

#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "trispectra/graph.hpp"
#include "trispectra/mutation.hpp"
#include "trispectra/triangulation.hpp"
#include "trispectra/walk_metrics.hpp"

namespace trispectra {

/// Kemeny's constant and the three Kirchhoff-type indices of one graph.
template <class Scalar>
struct Quantities {
  Scalar kemeny{};
  Scalar multiplicative{};
  Scalar additive{};
  Scalar kirchhoff{};
};

/// Inputs the closed forms consume. The hitting and resistance matrices are
/// only needed for two-node transfers.
struct GraphSummary {
  int nodes = 0;
  int edges = 0;
  double kemeny = 0.0;
  double kirchhoff = 0.0;
  double additive = 0.0;
  double multiplicative = 0.0;
  std::vector<Edge> edge_list;
  std::optional<Eigen::MatrixXd> hitting;
  std::optional<Eigen::MatrixXd> resistance;

  Quantities<double> quantities() const { return {kemeny, multiplicative, additive, kirchhoff}; }
};

GraphSummary summarize(const Graph& g, const MetricsReport& report);
GraphSummary summarize(const Graph& g, Route route = Route::Spectral);

/// A node of R_q(G) named by its role: an old node of G, or the copy-th new
/// node spanning edge {s, t} of G.
struct OldNode {
  int node = 0;
};
struct NewNode {
  int s = 0;
  int t = 0;
  int copy = 1;
};
using NodeRef = std::variant<OldNode, NewNode>;

NodeRef node_ref(const TriangulationResult& tri, int node);
int node_id(const TriangulationResult& tri, const NodeRef& ref);

/// Expected steps from `from` to `to` in R_q(G), from G's hitting times.
/// Throws SameNode if both refer to the same node and InvalidNodeRef if a
/// new node's endpoints are not an edge of G.
double transfer_hitting(int q, const GraphSummary& g, const NodeRef& from, const NodeRef& to);

/// Resistance between a and b in R_q(G), from G's resistances. Zero when
/// a and b are the same node.
double transfer_resistance(int q, const GraphSummary& g, const NodeRef& a, const NodeRef& b);

// Scalar closed forms. Templated so that the same expressions can be
// evaluated in double and in exact rational arithmetic; n and m are passed
// as Scalar for the same reason.

template <class Scalar>
Scalar ratio(long long num, long long den) {
  return Scalar(num) / Scalar(den);
}

template <class Scalar>
Scalar transfer_kemeny_value(int q, const Scalar& n, const Scalar& m, const Scalar& kemeny) {
  const Scalar qs(q);
  return formula_term(FormulaTerm::KemenyScale, ratio<Scalar>(4 * q + 2, q + 2) * kemeny) +
         formula_term(FormulaTerm::KemenyRational,
                      (qs * qs + (Scalar(4) * n - Scalar(1)) * qs + Scalar(2) * n) /
                          Scalar((q + 2) * (2 * q + 1))) +
         formula_term(FormulaTerm::KemenyLinear, m * qs - n);
}

template <class Scalar>
Scalar transfer_multiplicative_value(int q, const Scalar& n, const Scalar& m, const Scalar& mult) {
  const Scalar qs(q);
  return formula_term(FormulaTerm::MultScale, ratio<Scalar>(2 * (2 * q + 1) * (2 * q + 1), q + 2) * mult) +
         formula_term(FormulaTerm::MultLinear,
                      Scalar(2) * m *
                          ((qs * qs + (Scalar(4) * n - Scalar(1)) * qs + Scalar(2) * n) / Scalar(q + 2) +
                           (m * qs - n) * Scalar(2 * q + 1)));
}

template <class Scalar>
Scalar transfer_additive_value(int q, const Scalar& n, const Scalar& m, const Scalar& additive,
                               const Scalar& mult) {
  const Scalar qs(q);
  return formula_term(FormulaTerm::AddAdditive, ratio<Scalar>(2 * (2 * q + 1), q + 2) * additive) +
         formula_term(FormulaTerm::AddMultiplicative, ratio<Scalar>(2 * q * (2 * q + 1), q + 2) * mult) +
         formula_term(FormulaTerm::AddQuadratic, m * m * qs * Scalar(3 * q + 1)) -
         formula_term(FormulaTerm::AddLinear, m * qs * (Scalar(2) * n - Scalar(1))) +
         formula_term(FormulaTerm::AddRational,
                      (Scalar(5) * m - n) * (n - Scalar(1)) * qs / Scalar(q + 2));
}

template <class Scalar>
Scalar transfer_kirchhoff_value(int q, const Scalar& n, const Scalar& m, const Scalar& kirchhoff,
                                const Scalar& additive, const Scalar& mult) {
  const Scalar qs(q);
  return formula_term(FormulaTerm::KirKirchhoff, ratio<Scalar>(2, q + 2) * kirchhoff) +
         formula_term(FormulaTerm::KirAdditive, ratio<Scalar>(q, q + 2) * additive) +
         formula_term(FormulaTerm::KirMultiplicative, ratio<Scalar>(q * q, 2 * (q + 2)) * mult) +
         formula_term(FormulaTerm::KirQuadratic, m * m * qs * qs / Scalar(2)) +
         formula_term(FormulaTerm::KirRational,
                      (Scalar(2) * m - n) * (n - Scalar(1)) * qs / Scalar(2 * (q + 2)));
}

/// Sum of r~_ij over new nodes i and old nodes j.
template <class Scalar>
Scalar old_new_resistance_sum_value(int q, const Scalar& n, const Scalar& m, const Scalar& additive) {
  const Scalar qs(q);
  return formula_term(FormulaTerm::CrossAdditive, ratio<Scalar>(q, q + 2) * additive) +
         formula_term(FormulaTerm::CrossLinear, m * n * qs / Scalar(2)) -
         formula_term(FormulaTerm::CrossRational, n * (n - Scalar(1)) * qs / Scalar(2 * (q + 2)));
}

/// Sum of r~_ij over unordered pairs of new nodes.
template <class Scalar>
Scalar new_pair_resistance_sum_value(int q, const Scalar& n, const Scalar& m, const Scalar& mult) {
  const Scalar qs(q);
  return formula_term(FormulaTerm::NewPairMultiplicative, ratio<Scalar>(q * q, 2 * (q + 2)) * mult) +
         formula_term(FormulaTerm::NewPairQuadratic, m * qs * (m * qs - Scalar(1)) / Scalar(2)) -
         formula_term(FormulaTerm::NewPairRational,
                      m * (n - Scalar(1)) * qs * qs / Scalar(2 * (q + 2)));
}

/// All four quantities of R_q(G) from those of G.
template <class Scalar>
Quantities<Scalar> transfer_step(int q, const Scalar& n, const Scalar& m, const Quantities<Scalar>& g) {
  return {transfer_kemeny_value(q, n, m, g.kemeny),
          transfer_multiplicative_value(q, n, m, g.multiplicative),
          transfer_additive_value(q, n, m, g.additive, g.multiplicative),
          transfer_kirchhoff_value(q, n, m, g.kirchhoff, g.additive, g.multiplicative)};
}

// Summary-based entry points; all throw InvalidQ for q < 1.
double transfer_kemeny(int q, const GraphSummary& g);
double transfer_multiplicative(int q, const GraphSummary& g);
double transfer_additive(int q, const GraphSummary& g);
double transfer_kirchhoff(int q, const GraphSummary& g);
double old_new_resistance_sum(int q, const GraphSummary& g);
double new_pair_resistance_sum(int q, const GraphSummary& g);

}  // namespace trispectra
