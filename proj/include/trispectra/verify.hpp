#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trispectra/graph.hpp"
#include "trispectra/tolerances.hpp"

namespace trispectra {

/// Random connected graph on n nodes: a random recursive tree plus extra
/// edges. With `bipartite` set, extra edges only join nodes at depths of
/// different parity, so the result is bipartite.
Graph random_connected_graph(std::mt19937_64& rng, int n, bool bipartite);

/// `count` graphs with 2 <= n <= nmax; every third one (index 0, 3, ...) is
/// bipartite by construction.
std::vector<Graph> random_corpus(std::uint64_t seed, int count, int nmax);

struct VerifyOptions {
  std::uint64_t seed = 7;
  int trials = 50;
  int nmax = 10;
  int qmax = 3;
  int kmax = 6;
  std::optional<Graph> graph;  // replaces the random corpus
  std::optional<int> q;        // replaces 1..qmax
  Tolerances tolerances;
  bool stop_on_failure = false;
};

struct SuiteResult {
  std::string name;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  long checks = 0;
  long failures = 0;
  std::string first_failure;  // full inputs of the first failing check

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::string first_failure;  // suite name and inputs of the earliest failure

  bool passed() const;
  const SuiteResult* suite(const std::string& name) const;
  const SuiteResult* first_failed() const;
};

/// Runs every cross-check suite. Deterministic for fixed options.
VerifyReport run_verify(const VerifyOptions& options);

/// Human-readable edge list, e.g. "n=3 m=2 edges=[1-2 2-3]".
std::string describe_graph(const Graph& g);

}  // namespace trispectra
