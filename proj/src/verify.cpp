#include "trispectra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "trispectra/error.hpp"
#include "trispectra/io.hpp"
#include "trispectra/iterated.hpp"
#include "trispectra/rational.hpp"
#include "trispectra/spectral.hpp"
#include "trispectra/transfer.hpp"
#include "trispectra/triangulation.hpp"
#include "trispectra/walk_metrics.hpp"

namespace trispectra {

namespace {

// Largest R_{q,k}(G) the iterated-oracle suite will build.
constexpr std::uint64_t kIteratedOracleNodeLimit = 400;

double matrix_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double scale = b.cwiseAbs().maxCoeff();
  const double diff = (a - b).cwiseAbs().maxCoeff();
  return scale == 0.0 ? diff : diff / scale;
}

double quantities_deviation(const Quantities<double>& a, const Quantities<double>& b, std::string* worst) {
  const std::pair<const char*, double> devs[] = {
      {"kemeny", relative_deviation(a.kemeny, b.kemeny)},
      {"multiplicative", relative_deviation(a.multiplicative, b.multiplicative)},
      {"additive", relative_deviation(a.additive, b.additive)},
      {"kirchhoff", relative_deviation(a.kirchhoff, b.kirchhoff)},
  };
  double max = 0.0;
  for (const auto& [name, dev] : devs) {
    if (std::isnan(dev) || dev > max) {
      max = std::isnan(dev) ? std::numeric_limits<double>::infinity() : dev;
      if (worst) *worst = name;
    }
  }
  return max;
}

std::string show(const Quantities<double>& x) {
  return "(K=" + format_number(x.kemeny, 17) + ", mult=" + format_number(x.multiplicative, 17) +
         ", add=" + format_number(x.additive, 17) + ", kirchhoff=" + format_number(x.kirchhoff, 17) + ")";
}

Quantities<double> oracle_quantities(const Graph& g) {
  const KirchhoffIndices idx = kirchhoff_indices(g, resistance_oracle(g));
  return {kemeny_oracle(g), idx.multiplicative, idx.additive, idx.kirchhoff};
}

Quantities<Rational> exact(const Quantities<double>& x) {
  return {Rational(x.kemeny), Rational(x.multiplicative), Rational(x.additive), Rational(x.kirchhoff)};
}

double exact_deviation(const Rational& a, const Rational& b) {
  if (a == b) return 0.0;
  const Rational diff = abs(a - b);
  const double dev = to_double(b == 0 ? diff : diff / abs(b));
  return dev > 0.0 ? dev : std::numeric_limits<double>::denorm_min();
}

std::string describe_ref(const NodeRef& ref) {
  if (const auto* old = std::get_if<OldNode>(&ref)) return "old " + std::to_string(old->node);
  const auto& x = std::get<NewNode>(ref);
  return "new {" + std::to_string(x.s) + "," + std::to_string(x.t) + "}#" + std::to_string(x.copy);
}

struct Base {
  std::string label;
  long long nodes;
  long long edges;
  Quantities<double> approx;
  Quantities<Rational> exact;
};

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : opt_(options), tol_(options.tolerances) {
    if (opt_.qmax < 1) throw Error(ErrorKind::InvalidQ, "qmax must be at least 1");
    if (opt_.kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be non-negative");
    if (opt_.q && *opt_.q < 1) throw Error(ErrorKind::InvalidQ, "q must be a positive integer");
    if (opt_.q) {
      qs_ = {*opt_.q};
    } else {
      for (int q = 1; q <= opt_.qmax; ++q) qs_.push_back(q);
    }
    lift_eig_ = add("lift-eigenvalues", tol_.eig);
    lift_res_ = add("lift-residual", tol_.residual);
    lift_orth_ = add("lift-orthonormality", tol_.identity);
    hit_ = add("transfer-hitting", tol_.transfer);
    res_ = add("transfer-resistance", tol_.transfer);
    scalars_ = add("transfer-scalars", tol_.transfer);
    copies_ = add("copies", tol_.copies);
    identities_ = add("identities", tol_.identity);
    kernel_ = add("kernel-sum", tol_.identity);
    routes_ = add("route-agreement", tol_.identity);
    telescoping_ = add("iterated-telescoping", tol_.iterated);
    telescoping_exact_ = add("iterated-exact", 0.0);
    iter_oracle_ = add("iterated-oracle", tol_.iter_oracle);
    web_ = add("pseudofractal", tol_.pseudofractal);
    web_exact_ = add("pseudofractal-exact", 0.0);
    web_oracle_ = add("pseudofractal-oracle", tol_.iter_oracle);
    web_growth_ = add("pseudofractal-growth", 0.01);
  }

  VerifyReport run() {
    std::vector<Graph> graphs;
    if (opt_.graph) {
      graphs.push_back(*opt_.graph);
    } else {
      graphs = random_corpus(opt_.seed, opt_.trials, opt_.nmax);
    }
    for (std::size_t i = 0; i < graphs.size() && !stopped(); ++i) {
      for (const int q : qs_) {
        if (stopped()) break;
        run_case(static_cast<int>(i), graphs[i], q);
      }
    }
    if (!stopped()) run_iterated(graphs);
    if (!stopped()) run_pseudofractal();
    return {suites_, first_failure_};
  }

 private:
  std::size_t add(std::string name, double tolerance) {
    suites_.push_back(SuiteResult{std::move(name), tolerance, 0.0, 0, 0, {}});
    return suites_.size() - 1;
  }

  bool stopped() const { return opt_.stop_on_failure && failed_; }

  template <class Context>
  bool record(std::size_t index, double deviation, const Context& context) {
    SuiteResult& s = suites_[index];
    ++s.checks;
    const double shown = std::isnan(deviation) ? std::numeric_limits<double>::infinity() : deviation;
    s.max_deviation = std::max(s.max_deviation, shown);
    if (deviation <= s.tolerance) return true;
    ++s.failures;
    if (s.first_failure.empty()) {
      s.first_failure = context() + " (deviation " + format_number(shown, 6) + " > " +
                        format_number(s.tolerance, 6) + ")";
    }
    if (!failed_) first_failure_ = s.name + ": " + s.first_failure;
    failed_ = true;
    return false;
  }

  void run_case(int index, const Graph& g, int q) {
    const std::string where = "case " + std::to_string(index) + " " + describe_graph(g) + " q=" + std::to_string(q);
    const Spectrum spec = eigendecompose(g);
    const MetricsReport base_spectral = compute_metrics(g, spec);
    const MetricsReport base_oracle = compute_metrics(g, Route::Oracle);
    const GraphSummary summary = summarize(g, base_spectral);
    const TriangulationResult tri = q_triangulate(g, q);
    const Graph& r = tri.graph;
    const int nt = r.node_count();
    const int n = g.node_count();

    // Spectrum lift against direct eigendecomposition of R_q(G).
    const LiftedSpectrum lifted = lift_spectrum(spec, g, q);
    const Spectrum direct = eigendecompose(r);
    record(lift_eig_, max_multiset_deviation(lifted.spectrum.eigenvalues, direct.eigenvalues),
           [&] { return where + ": lifted vs direct eigenvalues"; });
    {
      const Eigen::MatrixXd p = normalized_adjacency(r);
      const Eigen::MatrixXd& v = lifted.spectrum.eigenvectors;
      const Eigen::VectorXd norms =
          (p * v - v * lifted.spectrum.eigenvalues.asDiagonal()).colwise().norm().transpose();
      Eigen::Index worst = 0;
      const double residual = norms.maxCoeff(&worst);
      record(lift_res_, residual / nt, [&] {
        return where + ": eigenpair " + std::to_string(worst + 1) + " (" +
               std::string(to_string(lifted.branches[worst])) + ", lambda=" +
               format_number(lifted.spectrum.eigenvalues(worst), 17) + ") residual/n";
      });
      record(lift_orth_, orthonormality_defect(v), [&] { return where + ": lifted eigenvectors"; });
    }

    // Oracles on the constructed graph.
    const Eigen::MatrixXd h = hitting_oracle(r);
    const Eigen::MatrixXd res = resistance_oracle(r);
    const double kemeny_r = kemeny_from_hitting(r, h, 1);
    const KirchhoffIndices idx_r = kirchhoff_indices(r, res);

    std::vector<NodeRef> refs;
    refs.reserve(nt);
    for (int a = 1; a <= nt; ++a) refs.push_back(node_ref(tri, a));

    for (int a = 1; a <= nt; ++a) {
      for (int b = 1; b <= nt; ++b) {
        if (a == b) continue;
        const double value = transfer_hitting(q, summary, refs[a - 1], refs[b - 1]);
        const double oracle = h(a - 1, b - 1);
        record(hit_, relative_deviation(value, oracle), [&] {
          return where + " nodes (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                 describe_ref(refs[a - 1]) + " -> " + describe_ref(refs[b - 1]) + ": transfer " +
                 format_number(value, 17) + " oracle " + format_number(oracle, 17);
        });
        if (a < b) {
          const double rv = transfer_resistance(q, summary, refs[a - 1], refs[b - 1]);
          const double ro = res(a - 1, b - 1);
          record(res_, relative_deviation(rv, ro), [&] {
            return where + " nodes (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                   describe_ref(refs[a - 1]) + " , " + describe_ref(refs[b - 1]) + ": transfer " +
                   format_number(rv, 17) + " oracle " + format_number(ro, 17);
          });
        }
      }
    }

    // Scalar transfers.
    double cross = 0.0;
    double new_pairs = 0.0;
    double old_pairs_transfer = 0.0;
    for (int a = 1; a <= nt; ++a) {
      for (int b = a + 1; b <= nt; ++b) {
        if (a > n) {
          new_pairs += res(a - 1, b - 1);
        } else if (b > n) {
          cross += res(a - 1, b - 1);
        } else {
          old_pairs_transfer += transfer_resistance(q, summary, OldNode{a}, OldNode{b});
        }
      }
    }
    const double kir = transfer_kirchhoff(q, summary);
    const double cross_t = old_new_resistance_sum(q, summary);
    const double pairs_t = new_pair_resistance_sum(q, summary);
    const std::pair<const char*, std::pair<double, double>> scalars[] = {
        {"kemeny", {transfer_kemeny(q, summary), kemeny_r}},
        {"multiplicative", {transfer_multiplicative(q, summary), idx_r.multiplicative}},
        {"additive", {transfer_additive(q, summary), idx_r.additive}},
        {"kirchhoff", {kir, idx_r.kirchhoff}},
        {"old/new resistance sum", {cross_t, cross}},
        {"new-pair resistance sum", {pairs_t, new_pairs}},
        {"kirchhoff decomposition", {old_pairs_transfer + cross_t + pairs_t, kir}},
    };
    for (const auto& [name, values] : scalars) {
      record(scalars_, relative_deviation(values.first, values.second), [&, name = name, values = values] {
        return where + ": " + name + " transfer " + format_number(values.first, 17) + " reference " +
               format_number(values.second, 17);
      });
    }

    // Copies of one generator edge.
    for (int e = 1; e <= g.edge_count() && q >= 2; ++e) {
      const Edge& edge = g.edge(e);
      const int first = tri.new_node(e, 1);
      for (int f = 2; f <= q; ++f) {
        const int other = tri.new_node(e, f);
        const auto context = [&](const char* what) {
          return [&, what] {
            return where + ": copies 1 and " + std::to_string(f) + " of edge {" + std::to_string(edge.u) + "," +
                   std::to_string(edge.v) + "} (nodes " + std::to_string(first) + "," + std::to_string(other) +
                   ") " + what;
          };
        };
        record(copies_, relative_deviation(res(first - 1, other - 1), 1.0), context("oracle resistance vs 1"));
        record(copies_,
               relative_deviation(transfer_resistance(q, summary, NewNode{edge.u, edge.v, 1},
                                                      NewNode{edge.u, edge.v, f}),
                                  1.0),
               context("transfer resistance vs 1"));
        double spread = 0.0;
        for (int y = 1; y <= nt; ++y) {
          if (y == first || y == other) continue;
          spread = std::max({spread, relative_deviation(h(other - 1, y - 1), h(first - 1, y - 1)),
                             relative_deviation(h(y - 1, other - 1), h(y - 1, first - 1)),
                             relative_deviation(res(other - 1, y - 1), res(first - 1, y - 1))});
        }
        record(copies_, spread, context("oracle hitting/resistance rows differ"));
      }
    }

    // Identities on G (spectral route) and on R_q(G) (oracle route).
    check_identities(where + " on G", g, base_spectral.hitting, base_spectral.resistance, base_spectral.kemeny,
                     base_spectral.indices);
    check_identities(where + " on R_q(G)", r, h, res, kemeny_r, idx_r);

    for (int j = n + 1; j <= nt; ++j) {
      const KernelSumCheck check = kernel_sum_identity(g, q, spec, lifted.kernel_basis, j);
      record(kernel_, check.residual, [&] {
        return where + ": new node " + std::to_string(j) + " kernel sum " + format_number(check.lhs, 17) +
               " spectral " + format_number(check.rhs, 17);
      });
    }

    // Spectral route vs oracle route.
    const MetricsReport lifted_spectral = compute_metrics(r, direct);
    const auto route = [&](const std::string& label, const MetricsReport& s, const Eigen::MatrixXd& oh,
                           const Eigen::MatrixXd& ores, double okemeny) {
      record(routes_, matrix_deviation(s.hitting, oh), [&] { return label + ": hitting matrices"; });
      record(routes_, matrix_deviation(s.resistance, ores), [&] { return label + ": resistance matrices"; });
      record(routes_, relative_deviation(s.kemeny, okemeny), [&] {
        return label + ": kemeny spectral " + format_number(s.kemeny, 17) + " oracle " + format_number(okemeny, 17);
      });
    };
    route(where + " on G", base_spectral, base_oracle.hitting, base_oracle.resistance, base_oracle.kemeny);
    route(where + " on R_q(G)", lifted_spectral, h, res, kemeny_r);
  }

  void check_identities(const std::string& label, const Graph& g, const Eigen::MatrixXd& h,
                        const Eigen::MatrixXd& res, double kemeny_value, const KirchhoffIndices& idx) {
    const double foster = foster_sum(g, res);
    record(identities_, relative_deviation(foster, g.node_count() - 1.0), [&] {
      return label + ": Foster sum " + format_number(foster, 17) + " vs n-1";
    });
    const double scale = std::max(1.0, (h + h.transpose()).cwiseAbs().maxCoeff());
    record(identities_, reciprocity_defect(g, h, res) / scale,
           [&] { return label + ": 2m r_ij vs T_ij + T_ji"; });
    const double two_m_k = 2.0 * g.edge_count() * kemeny_value;
    record(identities_, relative_deviation(idx.multiplicative, two_m_k), [&] {
      return label + ": multiplicative index " + format_number(idx.multiplicative, 17) + " vs 2mK " +
             format_number(two_m_k, 17);
    });
    for (int start = 1; start <= g.node_count(); ++start) {
      const double k = kemeny_from_hitting(g, h, start);
      record(identities_, relative_deviation(k, kemeny_value), [&] {
        return label + ": Kemeny from start " + std::to_string(start) + " " + format_number(k, 17) + " vs " +
               format_number(kemeny_value, 17);
      });
    }
  }

  void run_iterated(const std::vector<Graph>& graphs) {
    std::vector<Base> bases;
    const Quantities<double> k3{4.0 / 3.0, 8.0, 8.0, 2.0};
    const Quantities<double> k2{0.5, 1.0, 2.0, 1.0};
    bases.push_back({"K3", 3, 3, k3, pseudofractal_query<Rational>(1, 0).base});
    bases.push_back({"K2", 2, 1, k2, {Rational(1) / 2, Rational(1), Rational(2), Rational(1)}});
    for (std::size_t i = 0; i < graphs.size() && i < 4; ++i) {
      const GraphSummary s = summarize(graphs[i], Route::Spectral);
      bases.push_back({"case " + std::to_string(i) + " " + describe_graph(graphs[i]), s.nodes, s.edges,
                       s.quantities(), exact(s.quantities())});
    }

    for (const Base& base : bases) {
      for (const int q : qs_) {
        for (int k = 0; k <= opt_.kmax && !stopped(); ++k) {
          const std::string where = base.label + " q=" + std::to_string(q) + " k=" + std::to_string(k);
          const IteratedQuery<double> query{base.nodes, base.edges, base.approx, q, k};
          const Quantities<double> closed = iterated_quantities(query);
          const Quantities<double> chained = chained_transfers(query);
          std::string worst;
          record(telescoping_, quantities_deviation(closed, chained, &worst), [&] {
            return where + ": closed form " + show(closed) + " chained " + show(chained) + " worst " + worst;
          });

          const IteratedQuery<Rational> exact_query{base.nodes, base.edges, base.exact, q, k};
          const Quantities<Rational> a = iterated_quantities(exact_query);
          const Quantities<Rational> b = chained_transfers(exact_query);
          const double dev = std::max({exact_deviation(a.kemeny, b.kemeny),
                                       exact_deviation(a.multiplicative, b.multiplicative),
                                       exact_deviation(a.additive, b.additive),
                                       exact_deviation(a.kirchhoff, b.kirchhoff)});
          record(telescoping_exact_, dev, [&] { return where + ": exact closed form vs exact chained transfers"; });
        }
      }
    }

    // Closed forms against oracles on the constructed R_{q,k}(G).
    int used = 0;
    for (std::size_t i = 0; i < graphs.size() && used < 2 && !stopped(); ++i) {
      const Graph& g = graphs[i];
      const auto counts = predicted_counts(g.node_count(), g.edge_count(), 2, 2);
      if (counts.nodes > kIteratedOracleNodeLimit) continue;
      ++used;
      const Quantities<double> base = oracle_quantities(g);
      for (const int q : qs_) {
        if (q > 2) continue;
        const int kmax = std::min(2, opt_.kmax);
        if (kmax < 1) continue;
        const auto chain = iterate_triangulation(g, q, kmax);
        for (int k = 1; k <= kmax; ++k) {
          const Quantities<double> closed =
              iterated_quantities(IteratedQuery<double>{g.node_count(), g.edge_count(), base, q, k});
          const Quantities<double> oracle = oracle_quantities(chain[k - 1].graph);
          std::string worst;
          record(iter_oracle_, quantities_deviation(closed, oracle, &worst), [&] {
            return "case " + std::to_string(i) + " " + describe_graph(g) + " q=" + std::to_string(q) +
                   " k=" + std::to_string(k) + ": closed form " + show(closed) + " oracle " + show(oracle) +
                   " worst " + worst;
          });
        }
      }
    }
  }

  void run_pseudofractal() {
    for (const int q : qs_) {
      for (int k = 0; k <= opt_.kmax && !stopped(); ++k) {
        const std::string where = "N_{q,k} q=" + std::to_string(q) + " k=" + std::to_string(k);
        const Quantities<double> web = pseudofractal_metrics<double>(q, k);
        const Quantities<double> general = iterated_quantities(pseudofractal_query<double>(q, k));
        std::string worst;
        record(web_, quantities_deviation(web, general, &worst), [&] {
          return where + ": specialised " + show(web) + " general " + show(general) + " worst " + worst;
        });
        const Quantities<Rational> a = pseudofractal_metrics<Rational>(q, k);
        const Quantities<Rational> b = iterated_quantities(pseudofractal_query<Rational>(q, k));
        const double dev = std::max({exact_deviation(a.kemeny, b.kemeny),
                                     exact_deviation(a.multiplicative, b.multiplicative),
                                     exact_deviation(a.additive, b.additive),
                                     exact_deviation(a.kirchhoff, b.kirchhoff)});
        record(web_exact_, dev, [&] { return where + ": exact specialised vs exact general"; });
      }

      if (q <= 2) {
        const int kmax = std::min(2, opt_.kmax);
        if (kmax >= 1) {
          const auto chain = iterate_triangulation(builtin_graph("k3"), q, kmax);
          for (int k = 1; k <= kmax; ++k) {
            const Quantities<double> web = pseudofractal_metrics<double>(q, k);
            const Quantities<double> oracle = oracle_quantities(chain[k - 1].graph);
            std::string worst;
            record(web_oracle_, quantities_deviation(web, oracle, &worst), [&] {
              return "N_{q,k} q=" + std::to_string(q) + " k=" + std::to_string(k) + ": closed form " + show(web) +
                     " oracle " + show(oracle) + " worst " + worst;
            });
          }
        }
      }

      // Kirchhoff index over (2q+1)^{2k} approaches its leading coefficient;
      // q = 1 converges like (2/3)^k and only gets within 1% at k = 10.
      const int k = q == 1 ? 10 : 8;
      const double lead = 9.0 * (2 * q + 3) * (2 * q + 3) / (8.0 * (2 * q + 1) * (2 * q + 5));
      const double ratio = pseudofractal_metrics<double>(q, k).kirchhoff / std::pow(2.0 * q + 1.0, 2 * k);
      record(web_growth_, relative_deviation(ratio, lead), [&] {
        return "N_{q,k} q=" + std::to_string(q) + " k=" + std::to_string(k) + ": kirchhoff/(2q+1)^{2k} " +
               format_number(ratio, 17) + " vs " + format_number(lead, 17);
      });
    }
  }

  const VerifyOptions& opt_;
  const Tolerances& tol_;
  std::vector<int> qs_;
  std::vector<SuiteResult> suites_;
  bool failed_ = false;
  std::string first_failure_;
  std::size_t lift_eig_, lift_res_, lift_orth_, hit_, res_, scalars_, copies_, identities_, kernel_, routes_,
      telescoping_, telescoping_exact_, iter_oracle_, web_, web_exact_, web_oracle_, web_growth_;
};

}  // namespace

Graph random_connected_graph(std::mt19937_64& rng, int n, bool bipartite) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "random graphs need at least 2 nodes");
  std::vector<int> parent(n + 1, 0);
  std::vector<int> depth(n + 1, 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) {
    parent[v] = std::uniform_int_distribution<int>(1, v - 1)(rng);
    depth[v] = depth[parent[v]] + 1;
    edges.emplace_back(parent[v], v);
  }
  const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  std::bernoulli_distribution extra(p);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (parent[b] == a) continue;
      if (bipartite && depth[a] % 2 == depth[b] % 2) continue;
      if (extra(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> random_corpus(std::uint64_t seed, int count, int nmax) {
  if (nmax < 2) throw Error(ErrorKind::InvalidArgument, "nmax must be at least 2, got " + std::to_string(nmax));
  if (count < 0) throw Error(ErrorKind::InvalidArgument, "trial count must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(2, nmax)(rng);
    out.push_back(random_connected_graph(rng, n, i % 3 == 0));
  }
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const SuiteResult* VerifyReport::suite(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const SuiteResult* VerifyReport::first_failed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return &s;
  }
  return nullptr;
}

VerifyReport run_verify(const VerifyOptions& options) { return Runner(options).run(); }

std::string describe_graph(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.node_count() << " m=" << g.edge_count() << " edges=[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i > 0) out << ' ';
    out << g.edges()[i].u << '-' << g.edges()[i].v;
  }
  out << ']';
  return out.str();
}

}  // namespace trispectra
