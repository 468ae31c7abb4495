#include "trispectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trispectra/mutation.hpp"

namespace trispectra {

namespace {

void orient(Eigen::MatrixXd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      if (std::abs(vectors(r, c)) > 1e-12) {
        if (vectors(r, c) < 0) vectors.col(c) *= -1.0;
        break;
      }
    }
  }
}

// C = [B B ... B] with q copies, as doubles.
Eigen::MatrixXd stacked_incidence(const Graph& g, int q) {
  const Eigen::MatrixXd b = incidence_matrix(g).cast<double>();
  Eigen::MatrixXd c(b.rows(), b.cols() * q);
  for (int f = 0; f < q; ++f) c.middleCols(f * b.cols(), b.cols()) = b;
  return c;
}

struct LiftedColumn {
  double value;
  Branch branch;
  int source;
  Eigen::VectorXd vector;
};

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::Plus: return "plus";
    case Branch::Minus: return "minus";
    case Branch::Zero: return "zero";
    case Branch::BipartiteSpecial: return "bipartite";
  }
  return "unknown";
}

Spectrum eigendecompose(const Graph& g) {
  const int n = g.node_count();
  const Eigen::MatrixXd p = normalized_adjacency(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "symmetric eigensolver did not converge");
  }

  Spectrum spec;
  spec.nodes = n;
  spec.edges = g.edge_count();
  spec.eigenvalues = solver.eigenvalues().reverse();
  spec.eigenvectors = solver.eigenvectors().rowwise().reverse();
  orient(spec.eigenvectors);

  const double residual = max_eigen_residual(p, spec.eigenvalues, spec.eigenvectors);
  if (residual > 1e-10 * n) {
    throw Error(ErrorKind::ConvergenceFailure, "eigen residual " + std::to_string(residual) +
                                                   " exceeds " + std::to_string(1e-10 * n));
  }
  if (std::abs(spec.eigenvalues(0) - 1.0) > 1e-10) {
    throw Error(ErrorKind::ConvergenceFailure,
                "leading eigenvalue " + std::to_string(spec.eigenvalues(0)) + " differs from 1");
  }
  return spec;
}

double lift_delta(double lambda, int q) {
  const double coupling = formula_term(FormulaTerm::LiftDeltaCoupling, 2.0 * q * (q + 1.0));
  return lambda * lambda + coupling * (1.0 + lambda);
}

std::pair<double, double> lifted_eigenvalues(double lambda, int q) {
  const double root = std::sqrt(lift_delta(lambda, q));
  const double scale = formula_term(FormulaTerm::LiftEigenScale, 2.0 * (q + 1.0));
  return {(lambda + root) / scale, (lambda - root) / scale};
}

Eigen::MatrixXd kernel_basis(const Graph& g, int q) {
  if (q < 1) throw Error(ErrorKind::InvalidQ, "q must be a positive integer, got " + std::to_string(q));
  const Eigen::MatrixXd c = stacked_incidence(g, q);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = 1e-9 * sigma(0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;

  Eigen::MatrixXd basis = svd.matrixV().rightCols(c.cols() - rank);
  if (basis.cols() > 0) {
    const double worst = (c * basis).colwise().norm().maxCoeff();
    if (worst > 1e-10) {
      throw Error(ErrorKind::ConvergenceFailure,
                  "kernel basis residual " + std::to_string(worst) + " exceeds 1e-10");
    }
  }
  orient(basis);
  return basis;
}

LiftedSpectrum lift_spectrum(const Spectrum& spec, const Graph& g, int q) {
  if (q < 1) throw Error(ErrorKind::InvalidQ, "q must be a positive integer, got " + std::to_string(q));
  const int n = g.node_count();
  const int m = g.edge_count();
  if (spec.nodes != n || spec.edges != m || spec.eigenvalues.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "spectrum does not belong to this graph");
  }
  const int total = n + m * q;

  LiftedSpectrum out;
  out.q = q;
  out.bipartite = is_bipartite(g).bipartite;
  out.kernel_basis = kernel_basis(g, q);
  out.delta.resize(n);

  // w_i = B^T D^{-1/2} v_i; entry e is v_is/sqrt(d_s) + v_it/sqrt(d_t).
  const Eigen::VectorXd inv_sqrt_deg = g.degree_vector().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd bt = incidence_matrix(g).cast<double>().transpose();
  const Eigen::MatrixXd w = bt * inv_sqrt_deg.asDiagonal() * spec.eigenvectors;

  const double coupling = formula_term(FormulaTerm::LiftDeltaCoupling, 2.0 * q * (q + 1.0));
  const double scale = formula_term(FormulaTerm::LiftEigenScale, 2.0 * (q + 1.0));

  std::vector<LiftedColumn> columns;
  columns.reserve(total);
  const int paired = out.bipartite ? n - 1 : n;
  for (int i = 0; i < n; ++i) {
    const double lambda = spec.eigenvalues(i);
    const double delta = lambda * lambda + coupling * (1.0 + lambda);
    out.delta(i) = delta;
    if (i >= paired) continue;

    // plus = sqrt(Delta) + lambda and minus = sqrt(Delta) - lambda; their
    // product is coupling * (1 + lambda), used to avoid cancellation in
    // whichever of the two is small.
    const double root = std::sqrt(delta);
    double plus = 0.0;
    double minus = 0.0;
    if (lambda >= 0.0) {
      plus = root + lambda;
      minus = coupling * (1.0 + lambda) / plus;
    } else {
      minus = root - lambda;
      plus = coupling * (1.0 + lambda) / minus;
    }

    for (const bool is_plus : {true, false}) {
      const double gap = is_plus ? plus : minus;
      const double old_weight = std::sqrt(gap / (2.0 * root));
      const double new_weight = (is_plus ? 1.0 : -1.0) * std::sqrt((q + 1.0) / (root * gap));
      Eigen::VectorXd vec(total);
      vec.head(n) = old_weight * spec.eigenvectors.col(i);
      for (int f = 0; f < q; ++f) vec.segment(n + f * m, m) = new_weight * w.col(i);
      columns.push_back({(is_plus ? plus : -minus) / scale, is_plus ? Branch::Plus : Branch::Minus,
                         i + 1, std::move(vec)});
    }
  }

  for (Eigen::Index z = 0; z < out.kernel_basis.cols(); ++z) {
    Eigen::VectorXd vec = Eigen::VectorXd::Zero(total);
    vec.tail(m * q) = out.kernel_basis.col(z);
    columns.push_back({0.0, Branch::Zero, 0, std::move(vec)});
  }

  if (out.bipartite) {
    Eigen::VectorXd vec = Eigen::VectorXd::Zero(total);
    vec.head(n) = spec.eigenvectors.col(n - 1);
    const double special = formula_term(FormulaTerm::LiftBipartiteSpecial, -1.0 / (q + 1.0));
    columns.push_back({special, Branch::BipartiteSpecial, n, std::move(vec)});
  }

  if (static_cast<int>(columns.size()) != total) {
    throw Error(ErrorKind::ConvergenceFailure,
                "lifted " + std::to_string(columns.size()) + " eigenpairs, expected " +
                    std::to_string(total) + " (kernel rank mismatch)");
  }

  std::stable_sort(columns.begin(), columns.end(),
                   [](const LiftedColumn& a, const LiftedColumn& b) { return a.value > b.value; });

  out.spectrum.nodes = total;
  out.spectrum.edges = m * (2 * q + 1);
  out.spectrum.eigenvalues.resize(total);
  out.spectrum.eigenvectors.resize(total, total);
  out.branches.reserve(total);
  out.source.reserve(total);
  for (int k = 0; k < total; ++k) {
    out.spectrum.eigenvalues(k) = columns[k].value;
    out.spectrum.eigenvectors.col(k) = columns[k].vector;
    out.branches.push_back(columns[k].branch);
    out.source.push_back(columns[k].source);
  }
  return out;
}

KernelSumCheck kernel_sum_identity(const Graph& g, int q, const Spectrum& spec,
                                   const Eigen::MatrixXd& kernel, int new_node) {
  const int n = g.node_count();
  const int m = g.edge_count();
  if (new_node <= n || new_node > n + m * q) {
    throw Error(ErrorKind::InvalidArgument, "node " + std::to_string(new_node) + " is not a new node");
  }
  const int row = new_node - n - 1;
  const Edge& gen = g.edge(row % m + 1);

  KernelSumCheck check;
  check.lhs = kernel.cols() > 0 ? kernel.row(row).squaredNorm() : 0.0;

  const int last = is_bipartite(g).bipartite ? n - 1 : n;
  const double ds = std::sqrt(static_cast<double>(g.degree(gen.u)));
  const double dt = std::sqrt(static_cast<double>(g.degree(gen.v)));
  double spectral = 0.0;
  for (int k = 1; k < last; ++k) {
    const double s = spec.eigenvectors(gen.u - 1, k) / ds + spec.eigenvectors(gen.v - 1, k) / dt;
    spectral += s * s / ((1.0 + spec.eigenvalues(k)) * q);
  }
  check.rhs = 1.0 - 1.0 / (static_cast<double>(m) * q) - spectral;
  check.residual = std::abs(check.lhs - check.rhs);
  return check;
}

KernelSumCheck kernel_sum_identity(const Graph& g, int q, const Spectrum& spec, int new_node) {
  return kernel_sum_identity(g, q, spec, kernel_basis(g, q), new_node);
}

double max_multiset_deviation(Eigen::VectorXd a, Eigen::VectorXd b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidArgument, "eigenvalue multisets differ in size: " +
                                                std::to_string(a.size()) + " vs " +
                                                std::to_string(b.size()));
  }
  std::sort(a.data(), a.data() + a.size());
  std::sort(b.data(), b.data() + b.size());
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

std::vector<EigenvalueGroup> group_eigenvalues(const Eigen::VectorXd& values, double tol) {
  std::vector<EigenvalueGroup> groups;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (!groups.empty() && std::abs(values(k - 1) - values(k)) <= tol) {
      auto& last = groups.back();
      last.value = (last.value * last.multiplicity + values(k)) / (last.multiplicity + 1);
      ++last.multiplicity;
    } else {
      groups.push_back({values(k), 1});
    }
  }
  return groups;
}

double max_eigen_residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& values,
                          const Eigen::MatrixXd& vectors) {
  if (values.size() == 0) return 0.0;
  const Eigen::MatrixXd r = m * vectors - vectors * values.asDiagonal();
  return r.colwise().norm().maxCoeff();
}

double orthonormality_defect(const Eigen::MatrixXd& vectors) {
  if (vectors.cols() == 0) return 0.0;
  const Eigen::MatrixXd gram = vectors.transpose() * vectors;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace trispectra
