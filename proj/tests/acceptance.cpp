// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Tolerances are fixed here and deliberately ignore TRISPECTRA_TOL_* overrides.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "trispectra/io.hpp"
#include "trispectra/iterated.hpp"
#include "trispectra/mutation.hpp"
#include "trispectra/rational.hpp"
#include "trispectra/spectral.hpp"
#include "trispectra/transfer.hpp"
#include "trispectra/triangulation.hpp"
#include "trispectra/verify.hpp"
#include "trispectra/walk_metrics.hpp"

using namespace trispectra;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void report(int criterion, const std::string& title, const Outcome& o) {
  std::printf("%s criterion %d: %s", o.pass ? "PASS" : "FAIL", criterion, title.c_str());
  if (!o.detail.empty()) std::printf(" -- %s", o.detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string sci(double x) { return format_number(x, 3); }

void require_suites(Outcome& o, const VerifyReport& r, std::initializer_list<const char*> names) {
  std::string worst;
  for (const char* name : names) {
    const SuiteResult* s = r.suite(name);
    if (s == nullptr) {
      o.require(false, std::string("missing suite ") + name);
      continue;
    }
    o.require(s->checks > 0, std::string(name) + " ran no checks");
    o.require(s->passed(), s->name + ": " + s->first_failure);
    worst += (worst.empty() ? "" : ", ") + s->name + " max " + sci(s->max_deviation) + " (" +
             std::to_string(s->checks) + " checks)";
  }
  if (o.pass) o.detail = worst;
}

Quantities<double> oracle_quantities(const Graph& g) {
  const MetricsReport m = compute_metrics(g, Route::Oracle);
  return {m.kemeny, m.indices.multiplicative, m.indices.additive, m.indices.kirchhoff};
}

double quantities_deviation(const Quantities<double>& a, const Quantities<double>& b) {
  return std::max({relative_deviation(a.kemeny, b.kemeny), relative_deviation(a.multiplicative, b.multiplicative),
                   relative_deviation(a.additive, b.additive), relative_deviation(a.kirchhoff, b.kirchhoff)});
}

Quantities<double> to_double(const Quantities<Rational>& x) {
  return {trispectra::to_double(x.kemeny), trispectra::to_double(x.multiplicative),
          trispectra::to_double(x.additive), trispectra::to_double(x.kirchhoff)};
}

void criterion_base_values() {
  Outcome o;
  const Graph k3 = builtin_graph("k3");
  double worst = 0.0;
  for (const Route route : {Route::Spectral, Route::Oracle}) {
    const MetricsReport m = compute_metrics(k3, route);
    const double devs[] = {std::abs(m.kemeny - 4.0 / 3.0), std::abs(m.indices.kirchhoff - 2.0),
                           std::abs(m.indices.additive - 8.0), std::abs(m.indices.multiplicative - 8.0)};
    for (const double d : devs) {
      worst = std::max(worst, d);
      o.require(d <= 1e-10, std::string(to_string(route)) + " route deviates by " + sci(d));
    }
  }
  if (o.pass) o.detail = "max deviation " + sci(worst);
  report(1, "K3 base values K=4/3, Kf=2, additive=8, multiplicative=8 within 1e-10", o);
}

VerifyReport corpus_report() {
  VerifyOptions opt;
  opt.seed = 7;
  opt.trials = 200;
  opt.nmax = 12;
  opt.qmax = 3;
  opt.kmax = 6;
  opt.tolerances = Tolerances{};
  return run_verify(opt);
}

void criterion_spectrum_lift(const VerifyReport& r) {
  Outcome o;
  const auto corpus = random_corpus(7, 200, 12);
  int bipartite = 0;
  for (const Graph& g : corpus) bipartite += is_bipartite(g).bipartite ? 1 : 0;
  o.require(bipartite * 10 >= 3 * static_cast<int>(corpus.size()),
            "only " + std::to_string(bipartite) + " bipartite graphs");
  require_suites(o, r, {"lift-eigenvalues", "lift-residual", "lift-orthonormality"});
  if (o.pass) o.detail = std::to_string(bipartite) + "/200 bipartite; " + o.detail;
  report(2, "spectrum lift vs direct eigendecomposition (200 graphs, n<=12, q=1..3)", o);
}

void criterion_transfer(const VerifyReport& r) {
  Outcome o;
  require_suites(o, r, {"transfer-hitting", "transfer-resistance", "transfer-scalars"});
  report(3, "two-node and scalar transfers vs oracles on R_q(G), relative 1e-8", o);
}

void criterion_identities(const VerifyReport& r) {
  Outcome o;
  require_suites(o, r, {"identities", "kernel-sum"});
  report(4, "Foster, reciprocity, multiplicative = 2mK, kernel sums on G and R_q(G), 1e-8", o);
}

void criterion_telescoping() {
  Outcome o;
  VerifyOptions opt;
  opt.trials = 12;
  opt.nmax = 12;
  opt.qmax = 3;
  opt.kmax = 6;
  opt.tolerances = Tolerances{};
  const VerifyReport r = run_verify(opt);
  require_suites(o, r, {"iterated-telescoping", "iterated-exact"});
  const SuiteResult* exact = r.suite("iterated-exact");
  o.require(exact != nullptr && exact->max_deviation == 0.0, "exact path shows nonzero deviation");
  report(5, "iterated closed forms = chained transfers, q<=3, k<=6 (exact: zero; float: 1e-10)", o);
}

void criterion_pseudofractal() {
  Outcome o;
  const Quantities<Rational> web = pseudofractal_metrics<Rational>(1, 1);
  o.require(web.kemeny == Rational(14) / 3 && web.multiplicative == 84 && web.additive == 61 &&
                web.kirchhoff == Rational(65) / 6,
            "N_{1,1} closed forms differ from (14/3, 84, 61, 65/6)");

  const Graph n11 = q_triangulate(builtin_graph("k3"), 1).graph;
  o.require(n11.node_count() == 6 && n11.edge_count() == 9, "N_{1,1} is not 6 nodes / 9 edges");
  const double dev11 = quantities_deviation(to_double(web), oracle_quantities(n11));
  o.require(dev11 <= 1e-9, "N_{1,1} oracle deviation " + sci(dev11));

  double worst = 0.0;
  for (int q = 1; q <= 2; ++q) {
    const auto chain = iterate_triangulation(builtin_graph("k3"), q, 2);
    for (int k = 1; k <= 2; ++k) {
      const double dev = quantities_deviation(pseudofractal_metrics<double>(q, k), oracle_quantities(chain[k - 1].graph));
      worst = std::max(worst, dev);
      o.require(dev <= 1e-7, "q=" + std::to_string(q) + " k=" + std::to_string(k) + " deviation " + sci(dev));
    }
  }
  if (o.pass) o.detail = "N_{1,1} deviation " + sci(dev11) + ", (q,k) in {1,2}^2 max " + sci(worst);
  report(6, "pseudofractal closed forms: exact N_{1,1} values and oracle agreement", o);
}

void criterion_closed_loop() {
  Outcome o;
  const Graph k2 = builtin_graph("k2");
  const Graph k3 = builtin_graph("k3");
  const TriangulationResult tri = q_triangulate(k2, 1);
  o.require(tri.graph.edges() == k3.edges(), "R_1(K2) is not K3");

  const Spectrum s2 = eigendecompose(k2);
  const Spectrum s3 = eigendecompose(k3);
  double worst = max_multiset_deviation(lift_spectrum(s2, k2, 1).spectrum.eigenvalues, s3.eigenvalues);
  o.require(worst <= 1e-10, "lifted spectrum deviates by " + sci(worst));

  const MetricsReport m3 = compute_metrics(k3, s3);
  const GraphSummary summary = summarize(k2, Route::Spectral);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      const NodeRef ra = node_ref(tri, a);
      const NodeRef rb = node_ref(tri, b);
      const double dh = std::abs(transfer_hitting(1, summary, ra, rb) - m3.hitting_time(a, b));
      const double dr = std::abs(transfer_resistance(1, summary, ra, rb) - m3.resistance_between(a, b));
      worst = std::max({worst, dh, dr});
      o.require(dh <= 1e-10 && dr <= 1e-10, "two-node transfer " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  const Quantities<double> k3_values{4.0 / 3.0, 8.0, 8.0, 2.0};
  const Quantities<double> step = transfer_step<double>(1, 2.0, 1.0, summary.quantities());
  const Quantities<double> iter = iterated_quantities(IteratedQuery<double>{2, 1, summary.quantities(), 1, 1});
  const Quantities<double> oracle = oracle_quantities(tri.graph);
  for (const auto* x : {&step, &iter, &oracle}) {
    const double d = std::max({std::abs(x->kemeny - k3_values.kemeny),
                               std::abs(x->multiplicative - k3_values.multiplicative),
                               std::abs(x->additive - k3_values.additive),
                               std::abs(x->kirchhoff - k3_values.kirchhoff)});
    worst = std::max(worst, d);
    o.require(d <= 1e-10, "scalar quantities deviate by " + sci(d));
  }
  const double cross = old_new_resistance_sum(1, summary);
  worst = std::max(worst, std::abs(cross - 4.0 / 3.0));
  o.require(std::abs(cross - 4.0 / 3.0) <= 1e-10, "old/new resistance sum");
  if (o.pass) o.detail = "max deviation " + sci(worst);
  report(7, "pipeline on K2 with q=1 reproduces every K3 quantity within 1e-10", o);
}

void criterion_mutation() {
  Outcome o;
  VerifyOptions opt;
  opt.seed = 7;
  opt.trials = 9;
  opt.nmax = 8;
  opt.qmax = 3;
  opt.kmax = 6;
  opt.tolerances = Tolerances{};
  opt.stop_on_failure = true;
  o.require(run_verify(opt).passed(), "unmutated baseline fails");
  int caught = 0;
  for (const FormulaTerm term : all_formula_terms()) {
    const ScopedMutation guard(term);
    if (!run_verify(opt).passed()) {
      ++caught;
    } else {
      o.require(false, "mutation of " + std::string(to_string(term)) + " not detected");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(caught) + "/" + std::to_string(all_formula_terms().size()) + " terms caught";
  }
  report(8, "scaling any single closed-form term by 1.01 makes verify fail", o);
}

}  // namespace

int main() {
  criterion_base_values();
  const VerifyReport corpus = corpus_report();
  criterion_spectrum_lift(corpus);
  criterion_transfer(corpus);
  criterion_identities(corpus);
  criterion_telescoping();
  criterion_pseudofractal();
  criterion_closed_loop();
  criterion_mutation();
  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
