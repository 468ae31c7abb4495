#pragma once

namespace trispectra {

/// Pass thresholds used by the verification suites. Each one can be
/// overridden through an environment variable (TRISPECTRA_TOL_EIG,
/// TRISPECTRA_TOL_RESIDUAL, TRISPECTRA_TOL_TRANSFER, TRISPECTRA_TOL_IDENTITY,
/// TRISPECTRA_TOL_ITERATED, TRISPECTRA_TOL_PSEUDOFRACTAL,
/// TRISPECTRA_TOL_ITER_ORACLE, TRISPECTRA_TOL_COPIES).
struct Tolerances {
  double eig = 1e-8;             // eigenvalue multiset deviation
  double residual = 1e-9;        // eigen-residual, multiplied by the node count
  double transfer = 1e-8;        // relative, transfer vs oracle
  double identity = 1e-8;        // Foster, reciprocity, kernel sums, route agreement
  double iterated = 1e-10;       // relative, closed form vs chained transfers
  double pseudofractal = 1e-12;  // relative, specialised vs general closed forms
  double iter_oracle = 1e-7;     // relative, closed form vs oracle on R_{q,k}(G)
  double copies = 1e-9;          // oracle values for distinct copies of one edge

  static Tolerances from_environment();
};

/// |a - b| / |b|, or |a| when b is exactly zero.
double relative_deviation(double a, double b);

}  // namespace trispectra
