#include <doctest.h>

#include "support/exact_oracles.hpp"
#include "trispectra/error.hpp"
#include "trispectra/io.hpp"
#include "trispectra/verify.hpp"
#include "trispectra/walk_metrics.hpp"

using namespace trispectra;

TEST_CASE("hitting times on small graphs, both routes") {
  const Graph k3 = builtin_graph("k3");
  const Spectrum s3 = eigendecompose(k3);
  const Eigen::MatrixXd h3 = hitting_oracle(k3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      CHECK(hitting_spectral(s3, k3, i, j) == doctest::Approx(2.0).epsilon(1e-12));
      CHECK(h3(i - 1, j - 1) == doctest::Approx(2.0).epsilon(1e-12));
    }
  }

  const Graph k2 = builtin_graph("k2");
  CHECK(hitting_spectral(eigendecompose(k2), k2, 1, 2) == doctest::Approx(1.0).epsilon(1e-12));
  const Eigen::MatrixXd h2 = hitting_oracle(k2);
  CHECK(h2(0, 1) == doctest::Approx(1.0));
  CHECK(h2(1, 0) == doctest::Approx(1.0));
  CHECK(h2(0, 0) == 0.0);

  const Graph c4 = builtin_graph("cycle:4");
  CHECK(hitting_spectral(eigendecompose(c4), c4, 1, 3) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(hitting_oracle(c4)(0, 2) == doctest::Approx(4.0).epsilon(1e-12));

  const Graph p3 = builtin_graph("path:3");
  CHECK(hitting_oracle(p3)(0, 2) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(hitting_spectral(eigendecompose(p3), p3, 1, 3) == doctest::Approx(4.0).epsilon(1e-12));

  try {
    hitting_spectral(s3, k3, 2, 2);
    FAIL("expected SameNode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SameNode);
  }
}

TEST_CASE("Kemeny constant") {
  CHECK(kemeny(eigendecompose(builtin_graph("k3"))) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(kemeny(eigendecompose(builtin_graph("k2"))) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(kemeny_oracle(builtin_graph("k3")) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("resistances on small graphs, both routes") {
  const std::pair<const char*, double> cases[] = {{"k2", 1.0}, {"k3", 2.0 / 3.0}, {"path:3", 2.0}};
  for (const auto& [name, expected] : cases) {
    const Graph g = builtin_graph(name);
    const int last = g.node_count();
    CHECK(resistance_spectral(eigendecompose(g), g, 1, last) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(resistance_oracle(g)(0, last - 1) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(resistance_spectral(eigendecompose(g), g, 1, 1) == 0.0);
  }
}

TEST_CASE("Kirchhoff indices") {
  const auto k3 = kirchhoff_indices(builtin_graph("k3"), resistance_oracle(builtin_graph("k3")));
  CHECK(k3.kirchhoff == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(k3.additive == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(k3.multiplicative == doctest::Approx(8.0).epsilon(1e-14));
  const auto k2 = kirchhoff_indices(builtin_graph("k2"), resistance_oracle(builtin_graph("k2")));
  CHECK(k2.kirchhoff == doctest::Approx(1.0));
  CHECK(k2.additive == doctest::Approx(2.0));
  CHECK(k2.multiplicative == doctest::Approx(1.0));
}

TEST_CASE("routes agree with exact rational oracles") {
  for (const Graph& g : random_corpus(21, 25, 8)) {
    CAPTURE(describe_graph(g));
    const exact::Matrix h = exact::hitting(g);
    const exact::Matrix r = exact::resistance(g);
    const MetricsReport spectral = compute_metrics(g, Route::Spectral);
    const MetricsReport oracle = compute_metrics(g, Route::Oracle);
    for (int i = 0; i < g.node_count(); ++i) {
      for (int j = 0; j < g.node_count(); ++j) {
        const double he = to_double(h[i][j]);
        const double re = to_double(r[i][j]);
        CHECK(relative_deviation(spectral.hitting(i, j), he) <= 1e-9);
        CHECK(relative_deviation(oracle.hitting(i, j), he) <= 1e-9);
        CHECK(std::abs(spectral.resistance(i, j) - re) <= 1e-9 * std::max(1.0, re));
        CHECK(std::abs(oracle.resistance(i, j) - re) <= 1e-9 * std::max(1.0, re));
      }
    }
    const auto q = exact::quantities(g);
    CHECK(relative_deviation(spectral.kemeny, to_double(q.kemeny)) <= 1e-9);
    CHECK(relative_deviation(oracle.kemeny, to_double(q.kemeny)) <= 1e-9);
    CHECK(relative_deviation(kemeny_oracle(g), to_double(q.kemeny)) <= 1e-9);
    CHECK(relative_deviation(spectral.indices.multiplicative, to_double(q.multiplicative)) <= 1e-9);
  }
}

TEST_CASE("metric properties and identities") {
  for (const Graph& g : random_corpus(23, 40, 12)) {
    CAPTURE(describe_graph(g));
    const MetricsReport rep = compute_metrics(g, Route::Oracle);
    const Spectrum spec = eigendecompose(g);
    const int n = g.node_count();
    const Eigen::MatrixXd& r = rep.resistance;
    CHECK((r - r.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(r.minCoeff() >= -1e-12);
    CHECK(r.diagonal().isZero());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) CHECK(rep.hitting(i, j) >= 1.0 - 1e-12);
        for (int k = 0; k < n; ++k) CHECK(r(i, j) <= r(i, k) + r(k, j) + 1e-10);
      }
    }
    CHECK(foster_sum(g, r) == doctest::Approx(n - 1.0).epsilon(1e-8));
    CHECK(reciprocity_defect(g, rep.hitting, r) <= 1e-8 * std::max(1.0, rep.hitting.maxCoeff()));
    CHECK(relative_deviation(rep.indices.multiplicative, 2.0 * g.edge_count() * kemeny(spec)) <= 1e-8);
    CHECK(relative_deviation(multiplicative_from_spectrum(spec), rep.indices.multiplicative) <= 1e-8);
    for (int start = 1; start <= n; ++start) {
      CHECK(relative_deviation(kemeny_from_hitting(g, rep.hitting, start), kemeny(spec)) <= 1e-8);
    }
    CHECK(rep.resistance_row_sums().sum() == doctest::Approx(2.0 * rep.indices.kirchhoff).epsilon(1e-12));
  }
}
