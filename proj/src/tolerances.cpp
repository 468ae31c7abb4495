#include "trispectra/tolerances.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "trispectra/error.hpp"

namespace trispectra {

namespace {

void override_from(const char* name, double& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(name) + " must be a positive number, got '" + raw + "'");
  }
  target = value;
}

}  // namespace

Tolerances Tolerances::from_environment() {
  Tolerances tol;
  override_from("TRISPECTRA_TOL_EIG", tol.eig);
  override_from("TRISPECTRA_TOL_RESIDUAL", tol.residual);
  override_from("TRISPECTRA_TOL_TRANSFER", tol.transfer);
  override_from("TRISPECTRA_TOL_IDENTITY", tol.identity);
  override_from("TRISPECTRA_TOL_ITERATED", tol.iterated);
  override_from("TRISPECTRA_TOL_PSEUDOFRACTAL", tol.pseudofractal);
  override_from("TRISPECTRA_TOL_ITER_ORACLE", tol.iter_oracle);
  override_from("TRISPECTRA_TOL_COPIES", tol.copies);
  return tol;
}

double relative_deviation(double a, double b) {
  if (b == 0.0) return std::abs(a);
  return std::abs(a - b) / std::abs(b);
}

}  // namespace trispectra
