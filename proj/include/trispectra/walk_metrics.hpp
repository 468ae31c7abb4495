#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "trispectra/graph.hpp"
#include "trispectra/spectral.hpp"

namespace trispectra {

/// How a MetricsReport was obtained: from eigenpairs of P, or from direct
/// linear solves that never touch the spectrum.
enum class Route { Spectral, Oracle };

std::string_view to_string(Route route);

struct KirchhoffIndices {
  double kirchhoff = 0.0;       // sum over pairs of r_ij
  double additive = 0.0;        // sum over pairs of (d_i + d_j) r_ij
  double multiplicative = 0.0;  // sum over pairs of d_i d_j r_ij
};

/// Random-walk and resistance quantities of one graph. Matrix entry
/// (i-1, j-1) refers to nodes i, j; diagonals are zero.
struct MetricsReport {
  Route route = Route::Oracle;
  Eigen::MatrixXd hitting;
  double kemeny = 0.0;
  Eigen::MatrixXd resistance;
  KirchhoffIndices indices;

  double hitting_time(int from, int to) const { return hitting(from - 1, to - 1); }
  double resistance_between(int a, int b) const { return resistance(a - 1, b - 1); }

  /// r_s = sum_j r_sj for every node s.
  Eigen::VectorXd resistance_row_sums() const { return resistance.rowwise().sum(); }
};

// Spectral route ------------------------------------------------------------

/// Expected steps from i to j (1-based, i != j) from the eigenpairs of P.
/// Bipartite graphs drop the lambda = -1 term and add 1 when i and j lie in
/// different parts.
double hitting_spectral(const Spectrum& spec, const Graph& g, int i, int j);
Eigen::MatrixXd hitting_matrix_spectral(const Spectrum& spec, const Graph& g);

/// K(G) = sum_{k>=2} 1 / (1 - lambda_k).
double kemeny(const Spectrum& spec);

/// r_ij = sum_{k>=2} (v_ki/sqrt(d_i) - v_kj/sqrt(d_j))^2 / (1 - lambda_k);
/// zero when i == j.
double resistance_spectral(const Spectrum& spec, const Graph& g, int i, int j);
Eigen::MatrixXd resistance_matrix_spectral(const Spectrum& spec, const Graph& g);

/// 2m sum_{k>=2} 1 / (1 - lambda_k).
double multiplicative_from_spectrum(const Spectrum& spec);

// Oracle route --------------------------------------------------------------

/// Full hitting-time matrix by first-step analysis: for each target j, an
/// LU solve of h_i = 1 + sum_{u ~ i} h_u / d_i with h_j = 0.
Eigen::MatrixXd hitting_oracle(const Graph& g);

/// Full resistance matrix from the inverse of the Laplacian grounded at
/// node n.
Eigen::MatrixXd resistance_oracle(const Graph& g);

/// Kemeny's constant as trace(Z) - 1 with Z = (I - T + 1 pi^T)^{-1}.
double kemeny_oracle(const Graph& g);

// Route-agnostic ------------------------------------------------------------

/// sum_j pi_j T_ij for the 1-based start node i.
double kemeny_from_hitting(const Graph& g, const Eigen::MatrixXd& hitting, int start);

KirchhoffIndices kirchhoff_indices(const Graph& g, const Eigen::MatrixXd& resistance);

/// Sum of r_ij over the edges of g.
double foster_sum(const Graph& g, const Eigen::MatrixXd& resistance);

/// max_ij |2m r_ij - (T_ij + T_ji)|.
double reciprocity_defect(const Graph& g, const Eigen::MatrixXd& hitting,
                          const Eigen::MatrixXd& resistance);

MetricsReport compute_metrics(const Graph& g, Route route);
MetricsReport compute_metrics(const Graph& g, const Spectrum& spec);

}  // namespace trispectra
