#include "trispectra/walk_metrics.hpp"

#include <cmath>
#include <string>

namespace trispectra {

namespace {

void require_distinct(int i, int j) {
  if (i == j) throw Error(ErrorKind::SameNode, "hitting time needs distinct nodes, got " + std::to_string(i) + " twice");
}

void require_node(const Graph& g, int node) {
  if (node < 1 || node > g.node_count()) {
    throw Error(ErrorKind::NodeOutOfRange,
                "node " + std::to_string(node) + " outside 1.." + std::to_string(g.node_count()));
  }
}

// Index one past the last eigenpair used by the hitting-time sum.
int hitting_cutoff(const Spectrum& spec, bool bipartite) {
  return bipartite ? spec.nodes - 1 : spec.nodes;
}

double hitting_sum(const Spectrum& spec, const Eigen::VectorXd& deg, int last, double two_m,
                   int i, int j) {
  const auto& v = spec.eigenvectors;
  const double dj = deg(j);
  const double dij = std::sqrt(deg(i) * dj);
  double sum = 0.0;
  for (int k = 1; k < last; ++k) {
    sum += (v(j, k) * v(j, k) / dj - v(i, k) * v(j, k) / dij) / (1.0 - spec.eigenvalues(k));
  }
  return two_m * sum;
}

}  // namespace

std::string_view to_string(Route route) {
  return route == Route::Spectral ? "spectral" : "oracle";
}

double hitting_spectral(const Spectrum& spec, const Graph& g, int i, int j) {
  require_node(g, i);
  require_node(g, j);
  require_distinct(i, j);
  const auto check = is_bipartite(g);
  const double t = hitting_sum(spec, g.degree_vector(), hitting_cutoff(spec, check.bipartite),
                               2.0 * g.edge_count(), i - 1, j - 1);
  if (check.bipartite && !check.coloring->same_part(i, j)) return t + 1.0;
  return t;
}

Eigen::MatrixXd hitting_matrix_spectral(const Spectrum& spec, const Graph& g) {
  const int n = g.node_count();
  const auto check = is_bipartite(g);
  const int last = hitting_cutoff(spec, check.bipartite);
  const Eigen::VectorXd deg = g.degree_vector();
  const double two_m = 2.0 * g.edge_count();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      t(i, j) = hitting_sum(spec, deg, last, two_m, i, j);
      if (check.bipartite && !check.coloring->same_part(i + 1, j + 1)) t(i, j) += 1.0;
    }
  }
  return t;
}

double kemeny(const Spectrum& spec) {
  double sum = 0.0;
  for (Eigen::Index k = 1; k < spec.eigenvalues.size(); ++k) sum += 1.0 / (1.0 - spec.eigenvalues(k));
  return sum;
}

double multiplicative_from_spectrum(const Spectrum& spec) { return 2.0 * spec.edges * kemeny(spec); }

double resistance_spectral(const Spectrum& spec, const Graph& g, int i, int j) {
  require_node(g, i);
  require_node(g, j);
  if (i == j) return 0.0;
  const double si = std::sqrt(static_cast<double>(g.degree(i)));
  const double sj = std::sqrt(static_cast<double>(g.degree(j)));
  double sum = 0.0;
  for (int k = 1; k < spec.nodes; ++k) {
    const double diff = spec.eigenvectors(i - 1, k) / si - spec.eigenvectors(j - 1, k) / sj;
    sum += diff * diff / (1.0 - spec.eigenvalues(k));
  }
  return sum;
}

Eigen::MatrixXd resistance_matrix_spectral(const Spectrum& spec, const Graph& g) {
  // r_ij = X_ii + X_jj - 2 X_ij with X = D^{-1/2} (sum_{k>=2} v_k v_k^T / (1 - lambda_k)) D^{-1/2}.
  const int n = g.node_count();
  const Eigen::VectorXd inv_sqrt = g.degree_vector().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd scaled = inv_sqrt.asDiagonal() * spec.eigenvectors.rightCols(n - 1);
  const Eigen::VectorXd weights = (1.0 - spec.eigenvalues.tail(n - 1).array()).inverse().matrix();
  const Eigen::MatrixXd x = scaled * weights.asDiagonal() * scaled.transpose();
  Eigen::MatrixXd r(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r(i, j) = i == j ? 0.0 : x(i, i) + x(j, j) - 2.0 * x(i, j);
  }
  return r;
}

Eigen::MatrixXd hitting_oracle(const Graph& g) {
  const int n = g.node_count();
  const Eigen::MatrixXd t = transition_matrix(g);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  if (n == 1) return h;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n - 1);
  Eigen::MatrixXd system(n - 1, n - 1);
  for (int target = 0; target < n; ++target) {
    // (I - T) restricted to the non-target nodes.
    for (int r = 0, i = 0; i < n; ++i) {
      if (i == target) continue;
      for (int c = 0, j = 0; j < n; ++j) {
        if (j == target) continue;
        system(r, c) = (i == j ? 1.0 : 0.0) - t(i, j);
        ++c;
      }
      ++r;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    const Eigen::VectorXd x = lu.solve(ones);
    const double residual = (system * x - ones).cwiseAbs().maxCoeff();
    if (!x.allFinite() || residual > 1e-10 * std::max(1.0, x.cwiseAbs().maxCoeff())) {
      throw Error(ErrorKind::SingularSystem,
                  "first-step system for target " + std::to_string(target + 1) + " has residual " +
                      std::to_string(residual));
    }
    for (int r = 0, i = 0; i < n; ++i) {
      if (i == target) continue;
      h(i, target) = x(r++);
    }
  }
  return h;
}

Eigen::MatrixXd resistance_oracle(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  if (n == 1) return r;
  const Eigen::MatrixXd lap = (degree_matrix(g) - adjacency_matrix(g)).cast<double>();
  const Eigen::MatrixXd grounded = lap.topLeftCorner(n - 1, n - 1);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(grounded);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n - 1, n - 1);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  x.topLeftCorner(n - 1, n - 1) = lu.solve(identity);
  const double residual = (grounded * x.topLeftCorner(n - 1, n - 1) - identity).cwiseAbs().maxCoeff();
  if (!x.allFinite() || residual > 1e-10 * std::max(1.0, x.cwiseAbs().maxCoeff())) {
    throw Error(ErrorKind::SingularSystem,
                "grounded Laplacian solve has residual " + std::to_string(residual));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r(i, j) = i == j ? 0.0 : x(i, i) + x(j, j) - 2.0 * x(i, j);
  }
  return r;
}

double kemeny_oracle(const Graph& g) {
  const int n = g.node_count();
  const Eigen::VectorXd pi = stationary_distribution(g);
  const Eigen::MatrixXd fundamental = Eigen::MatrixXd::Identity(n, n) - transition_matrix(g) +
                                      Eigen::VectorXd::Ones(n) * pi.transpose();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(fundamental);
  const Eigen::MatrixXd z = lu.inverse();
  if (!z.allFinite()) throw Error(ErrorKind::SingularSystem, "fundamental matrix is singular");
  return z.trace() - 1.0;
}

double kemeny_from_hitting(const Graph& g, const Eigen::MatrixXd& hitting, int start) {
  require_node(g, start);
  return hitting.row(start - 1).dot(stationary_distribution(g));
}

KirchhoffIndices kirchhoff_indices(const Graph& g, const Eigen::MatrixXd& resistance) {
  KirchhoffIndices out;
  const int n = g.node_count();
  const Eigen::VectorXd d = g.degree_vector();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r = resistance(i, j);
      out.kirchhoff += r;
      out.additive += (d(i) + d(j)) * r;
      out.multiplicative += d(i) * d(j) * r;
    }
  }
  return out;
}

double foster_sum(const Graph& g, const Eigen::MatrixXd& resistance) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += resistance(e.u - 1, e.v - 1);
  return sum;
}

double reciprocity_defect(const Graph& g, const Eigen::MatrixXd& hitting,
                          const Eigen::MatrixXd& resistance) {
  const double two_m = 2.0 * g.edge_count();
  return (two_m * resistance - hitting - hitting.transpose()).cwiseAbs().maxCoeff();
}

MetricsReport compute_metrics(const Graph& g, Route route) {
  if (route == Route::Spectral) return compute_metrics(g, eigendecompose(g));
  MetricsReport report;
  report.route = Route::Oracle;
  report.hitting = hitting_oracle(g);
  report.kemeny = kemeny_from_hitting(g, report.hitting, 1);
  report.resistance = resistance_oracle(g);
  report.indices = kirchhoff_indices(g, report.resistance);
  return report;
}

MetricsReport compute_metrics(const Graph& g, const Spectrum& spec) {
  MetricsReport report;
  report.route = Route::Spectral;
  report.hitting = hitting_matrix_spectral(spec, g);
  report.kemeny = kemeny(spec);
  report.resistance = resistance_matrix_spectral(spec, g);
  report.indices = kirchhoff_indices(g, report.resistance);
  return report;
}

}  // namespace trispectra
