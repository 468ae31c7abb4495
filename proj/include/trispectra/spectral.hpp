#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "trispectra/graph.hpp"

namespace trispectra {

/// Eigenpairs of a normalized adjacency matrix P = D^{-1/2} A D^{-1/2}.
///
/// Eigenvalues are sorted descending and column k of `eigenvectors` belongs
/// to eigenvalues(k). Each eigenvector is oriented so that its first entry
/// with magnitude above 1e-12 is positive.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  int nodes = 0;
  int edges = 0;
};

/// Dense symmetric eigendecomposition of the normalized adjacency matrix.
/// Throws ErrorKind::ConvergenceFailure if any residual ||P v - lambda v||
/// exceeds 1e-10 * n or the leading eigenvalue is not 1.
Spectrum eigendecompose(const Graph& g);

/// Which family of eigenpairs of R_q(G) a lifted eigenpair belongs to.
enum class Branch { Plus, Minus, Zero, BipartiteSpecial };

std::string_view to_string(Branch branch);

/// Spectrum of R_q(G) assembled from the spectrum of G.
struct LiftedSpectrum {
  Spectrum spectrum;                // eigenpairs of R_q(G), sorted descending
  std::vector<Branch> branches;     // branch of each output eigenpair
  std::vector<int> source;          // 1-based base eigenvalue index, 0 for Zero
  Eigen::VectorXd delta;            // Delta_i for every base eigenvalue
  Eigen::MatrixXd kernel_basis;     // orthonormal basis of ker [B ... B]
  bool bipartite = false;
  int q = 0;
};

/// Delta_i = lambda_i^2 + 2q(q+1)(1 + lambda_i).
double lift_delta(double lambda, int q);

/// The two eigenvalues of P~ generated by a base eigenvalue lambda:
/// (lambda +- sqrt(Delta)) / (2(q+1)). first is the plus branch.
std::pair<double, double> lifted_eigenvalues(double lambda, int q);

/// Full eigendecomposition of P~ for R_q(G) built from `spec` without
/// decomposing P~. Node order matches q_triangulate.
LiftedSpectrum lift_spectrum(const Spectrum& spec, const Graph& g, int q);

/// Orthonormal basis (columns) of the kernel of C = [B B ... B] (q copies),
/// from an SVD of C with singular values <= 1e-9 sigma_max treated as zero.
Eigen::MatrixXd kernel_basis(const Graph& g, int q);

struct KernelSumCheck {
  double lhs = 0.0;  // sum_z Y_zj^2
  double rhs = 0.0;  // spectral expression
  double residual = 0.0;
};

/// Checks sum_z Y_zj^2 = 1 - 1/(mq) - sum_k (v_ks/sqrt(d_s) + v_kt/sqrt(d_t))^2
/// / ((1 + lambda_k) q) for new node `new_node` of R_q(G) (its id as assigned
/// by q_triangulate). The spectral sum skips k = n for bipartite G.
KernelSumCheck kernel_sum_identity(const Graph& g, int q, const Spectrum& spec,
                                   const Eigen::MatrixXd& kernel, int new_node);
KernelSumCheck kernel_sum_identity(const Graph& g, int q, const Spectrum& spec, int new_node);

/// Largest |a_k - b_k| after sorting both multisets. Sizes must agree.
double max_multiset_deviation(Eigen::VectorXd a, Eigen::VectorXd b);

struct EigenvalueGroup {
  double value = 0.0;
  int multiplicity = 0;
};

/// Groups a descending-sorted eigenvalue list into runs whose consecutive
/// members differ by at most `tol`.
std::vector<EigenvalueGroup> group_eigenvalues(const Eigen::VectorXd& values, double tol = 1e-8);

/// Largest eigen-equation residual ||M v_k - lambda_k v_k|| over all columns.
double max_eigen_residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& values,
                          const Eigen::MatrixXd& vectors);

/// ||V^T V - I||_max.
double orthonormality_defect(const Eigen::MatrixXd& vectors);

}  // namespace trispectra
