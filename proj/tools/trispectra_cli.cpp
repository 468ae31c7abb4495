// trispectra: q-triangulation, walk metrics and closed-form cross-checks.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trispectra/error.hpp"
#include "trispectra/io.hpp"
#include "trispectra/iterated.hpp"
#include "trispectra/mutation.hpp"
#include "trispectra/spectral.hpp"
#include "trispectra/tolerances.hpp"
#include "trispectra/transfer.hpp"
#include "trispectra/triangulation.hpp"
#include "trispectra/verify.hpp"
#include "trispectra/walk_metrics.hpp"

using namespace trispectra;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

std::string num(double x) { return format_number(x, 12); }

void row(const std::string& label, const std::vector<std::string>& cells) {
  std::printf("%-28s", label.c_str());
  for (const auto& c : cells) std::printf(" %22s", c.c_str());
  std::printf("\n");
}

void write_file(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::FileNotFound, "cannot write '" + path.string() + "'");
  write_matrix_csv(out, m);
}

// triangulate ---------------------------------------------------------------

struct TriangulateArgs {
  std::string graph;
  int q = 1;
  int k = 1;
  std::string format = "table";
};

int cmd_triangulate(const TriangulateArgs& a) {
  const Graph g = load_graph(a.graph);
  if (a.k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1 for triangulate");
  const auto steps = iterate_triangulation(g, a.q, a.k);
  const TriangulationResult& last = steps.back();
  if (a.format == "json") {
    json provenance = json::array();
    for (int node = last.base.node_count() + 1; node <= last.graph.node_count(); ++node) {
      const auto origin = last.origin(node);
      provenance.push_back({{"new_node", node}, {"generator_edge", origin.edge}, {"copy", origin.copy}});
    }
    json out = {{"q", a.q}, {"k", a.k}, {"graph", graph_json(last.graph)}, {"provenance", provenance}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  write_edge_list(std::cout, last.graph);
  write_provenance(std::cout, last);
  return 0;
}

// metrics -------------------------------------------------------------------

struct MetricsArgs {
  std::string graph;
  std::string format = "table";
  std::string csv_dir;
};

int cmd_metrics(const MetricsArgs& a) {
  const Graph g = load_graph(a.graph);
  const MetricsReport spectral = compute_metrics(g, Route::Spectral);
  const MetricsReport oracle = compute_metrics(g, Route::Oracle);
  const double hit_dev = (spectral.hitting - oracle.hitting).cwiseAbs().maxCoeff();
  const double res_dev = (spectral.resistance - oracle.resistance).cwiseAbs().maxCoeff();
  const std::vector<std::pair<std::string, std::pair<double, double>>> scalars = {
      {"kemeny", {spectral.kemeny, oracle.kemeny}},
      {"kirchhoff", {spectral.indices.kirchhoff, oracle.indices.kirchhoff}},
      {"additive", {spectral.indices.additive, oracle.indices.additive}},
      {"multiplicative", {spectral.indices.multiplicative, oracle.indices.multiplicative}},
  };
  double max_dev = std::max(hit_dev, res_dev);
  for (const auto& [name, v] : scalars) max_dev = std::max(max_dev, std::abs(v.first - v.second));
  const double foster = foster_sum(g, oracle.resistance);

  if (!a.csv_dir.empty()) {
    const std::filesystem::path dir(a.csv_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "hitting_spectral.csv", spectral.hitting);
    write_file(dir / "hitting_oracle.csv", oracle.hitting);
    write_file(dir / "resistance_spectral.csv", spectral.resistance);
    write_file(dir / "resistance_oracle.csv", oracle.resistance);
  }

  if (a.format == "json") {
    json out = {{"graph", graph_json(g)},
                {"spectral", metrics_json(spectral)},
                {"oracle", metrics_json(oracle)},
                {"max_deviation", max_dev},
                {"foster", {{"sum", foster}, {"expected", g.node_count() - 1}}}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (a.format == "csv") {
    std::cout << "quantity,spectral,oracle,deviation\n";
    for (const auto& [name, v] : scalars) {
      std::cout << name << ',' << format_number(v.first, 17) << ',' << format_number(v.second, 17) << ','
                << format_number(std::abs(v.first - v.second), 17) << '\n';
    }
    return 0;
  }
  std::printf("graph: %d nodes, %d edges\n", g.node_count(), g.edge_count());
  row("quantity", {"spectral", "oracle", "abs deviation"});
  for (const auto& [name, v] : scalars) row(name, {num(v.first), num(v.second), num(std::abs(v.first - v.second))});
  row("hitting matrix", {"", "", num(hit_dev)});
  row("resistance matrix", {"", "", num(res_dev)});
  std::printf("foster: sum over edges r = %s (n-1 = %d)\n", num(foster).c_str(), g.node_count() - 1);
  std::printf("max deviation: %s\n", num(max_dev).c_str());
  return 0;
}

// transfer ------------------------------------------------------------------

struct TransferArgs {
  std::string graph;
  int q = 1;
  int from = 0;
  int to = 0;
  std::string format = "table";
};

int cmd_transfer(const TransferArgs& a) {
  const Graph g = load_graph(a.graph);
  const GraphSummary summary = summarize(g, Route::Spectral);
  const TriangulationResult tri = q_triangulate(g, a.q);
  const Graph& r = tri.graph;
  const int n = g.node_count();
  const int nt = r.node_count();
  const Eigen::MatrixXd h = hitting_oracle(r);
  const Eigen::MatrixXd res = resistance_oracle(r);
  const KirchhoffIndices idx = kirchhoff_indices(r, res);

  double cross = 0.0;
  double pairs = 0.0;
  double hit_dev = 0.0;
  double res_dev = 0.0;
  for (int i = 1; i <= nt; ++i) {
    for (int j = 1; j <= nt; ++j) {
      if (i == j) continue;
      const NodeRef ri = node_ref(tri, i);
      const NodeRef rj = node_ref(tri, j);
      hit_dev = std::max(hit_dev, std::abs(transfer_hitting(a.q, summary, ri, rj) - h(i - 1, j - 1)));
      if (i < j) {
        res_dev = std::max(res_dev, std::abs(transfer_resistance(a.q, summary, ri, rj) - res(i - 1, j - 1)));
        if (i > n) pairs += res(i - 1, j - 1);
        else if (j > n) cross += res(i - 1, j - 1);
      }
    }
  }

  std::vector<std::pair<std::string, std::pair<double, double>>> rows = {
      {"kemeny", {transfer_kemeny(a.q, summary), kemeny_from_hitting(r, h, 1)}},
      {"multiplicative", {transfer_multiplicative(a.q, summary), idx.multiplicative}},
      {"additive", {transfer_additive(a.q, summary), idx.additive}},
      {"kirchhoff", {transfer_kirchhoff(a.q, summary), idx.kirchhoff}},
      {"old/new resistance sum", {old_new_resistance_sum(a.q, summary), cross}},
      {"new-pair resistance sum", {new_pair_resistance_sum(a.q, summary), pairs}},
  };
  if (a.from != 0 || a.to != 0) {
    const NodeRef ra = node_ref(tri, a.from);
    const NodeRef rb = node_ref(tri, a.to);
    const std::string f = std::to_string(a.from);
    const std::string t = std::to_string(a.to);
    rows.push_back({"hitting " + f + "->" + t, {transfer_hitting(a.q, summary, ra, rb), h(a.from - 1, a.to - 1)}});
    rows.push_back({"hitting " + t + "->" + f, {transfer_hitting(a.q, summary, rb, ra), h(a.to - 1, a.from - 1)}});
    rows.push_back(
        {"resistance " + f + "," + t, {transfer_resistance(a.q, summary, ra, rb), res(a.from - 1, a.to - 1)}});
  }

  if (a.format == "json") {
    json quantities = json::object();
    for (const auto& [name, v] : rows) {
      quantities[name] = {{"transfer", v.first}, {"oracle", v.second}, {"deviation", std::abs(v.first - v.second)}};
    }
    json out = {{"graph", graph_json(g)},
                {"q", a.q},
                {"quantities", quantities},
                {"max_hitting_deviation", hit_dev},
                {"max_resistance_deviation", res_dev}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::printf("G: %d nodes, %d edges; R_q(G) with q=%d: %d nodes, %d edges\n", n, g.edge_count(), a.q, nt,
              r.edge_count());
  row("quantity", {"transfer", "oracle", "abs deviation"});
  for (const auto& [name, v] : rows) row(name, {num(v.first), num(v.second), num(std::abs(v.first - v.second))});
  row("all-pairs hitting", {"", "", num(hit_dev)});
  row("all-pairs resistance", {"", "", num(res_dev)});
  return 0;
}

// spectrum ------------------------------------------------------------------

struct SpectrumArgs {
  std::string graph;
  int q = 0;
  std::string format = "json";
};

int cmd_spectrum(const SpectrumArgs& a) {
  const Graph g = load_graph(a.graph);
  const Spectrum spec = eigendecompose(g);
  if (a.q == 0) {
    if (a.format == "json") {
      std::cout << spectrum_json(spec).dump(2) << '\n';
    } else {
      for (const auto& grp : group_eigenvalues(spec.eigenvalues)) {
        std::printf("%22s  x%d\n", num(grp.value).c_str(), grp.multiplicity);
      }
    }
    return 0;
  }
  const LiftedSpectrum lifted = lift_spectrum(spec, g, a.q);
  if (a.format == "json") {
    std::cout << spectrum_json(lifted).dump(2) << '\n';
    return 0;
  }
  const Spectrum direct = eigendecompose(q_triangulate(g, a.q).graph);
  row("eigenvalue", {"branch", "source"});
  for (Eigen::Index k = 0; k < lifted.spectrum.eigenvalues.size(); ++k) {
    row(num(lifted.spectrum.eigenvalues(k)),
        {std::string(to_string(lifted.branches[k])), std::to_string(lifted.source[k])});
  }
  std::printf("max deviation from direct eigendecomposition: %s\n",
              num(max_multiset_deviation(lifted.spectrum.eigenvalues, direct.eigenvalues)).c_str());
  return 0;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  VerifyOptions options;
  std::string graph;
  int q = 0;
  std::string mutate;
  bool list_mutations = false;
  std::string format = "table";
};

int cmd_verify(VerifyArgs& a) {
  if (a.list_mutations) {
    for (const FormulaTerm term : all_formula_terms()) std::cout << to_string(term) << '\n';
    return 0;
  }
  std::optional<FormulaTerm> mutation;
  if (!a.mutate.empty()) {
    mutation = formula_term_from_string(a.mutate);
    if (!mutation) throw Error(ErrorKind::InvalidArgument, "unknown formula term '" + a.mutate + "'");
  }
  VerifyOptions& o = a.options;
  o.tolerances = Tolerances::from_environment();
  if (!a.graph.empty()) o.graph = load_graph(a.graph);
  if (a.q != 0) o.q = a.q;

  const ScopedMutation guard(mutation);
  const VerifyReport report = run_verify(o);

  if (a.format == "json") {
    json suites = json::array();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name},
                        {"checks", s.checks},
                        {"failures", s.failures},
                        {"max_deviation", s.max_deviation},
                        {"tolerance", s.tolerance},
                        {"passed", s.passed()}});
    }
    json out = {{"seed", o.seed}, {"passed", report.passed()}, {"suites", suites}};
    if (mutation) out["mutation"] = std::string(to_string(*mutation));
    if (!report.passed()) out["first_failure"] = report.first_failure;
    std::cout << out.dump(2) << '\n';
  } else {
    if (mutation) std::printf("mutation: %s\n", std::string(to_string(*mutation)).c_str());
    std::printf("%-22s %8s %9s %14s %10s  %s\n", "suite", "checks", "failures", "max deviation", "tolerance",
                "result");
    for (const auto& s : report.suites) {
      std::printf("%-22s %8ld %9ld %14s %10s  %s\n", s.name.c_str(), s.checks, s.failures,
                  format_number(s.max_deviation, 6).c_str(), format_number(s.tolerance, 3).c_str(),
                  s.passed() ? "PASS" : "FAIL");
    }
    if (!report.passed()) std::printf("first failure: %s\n", report.first_failure.c_str());
    std::printf("%s\n", report.passed() ? "all suites passed" : "verification FAILED");
  }
  return report.passed() ? 0 : kExitVerifyFailed;
}

// pseudofractal -------------------------------------------------------------

struct PseudofractalArgs {
  int q = 1;
  int kmax = 3;
  std::string format = "table";
};

int cmd_pseudofractal(const PseudofractalArgs& a) {
  if (a.kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be non-negative");
  json rows = json::array();
  if (a.format == "csv") std::cout << "k,nodes,edges,kemeny,multiplicative,additive,kirchhoff\n";
  if (a.format == "table") row("k", {"nodes", "edges", "kemeny", "multiplicative", "additive", "kirchhoff"});
  for (int k = 0; k <= a.kmax; ++k) {
    const GraphCounts counts = predicted_counts(3, 3, a.q, k);
    const Quantities<double> x = pseudofractal_metrics<double>(a.q, k);
    if (a.format == "json") {
      rows.push_back({{"k", k},
                      {"nodes", counts.nodes},
                      {"edges", counts.edges},
                      {"kemeny", x.kemeny},
                      {"multiplicative", x.multiplicative},
                      {"additive", x.additive},
                      {"kirchhoff", x.kirchhoff}});
    } else if (a.format == "csv") {
      std::cout << k << ',' << counts.nodes << ',' << counts.edges << ',' << format_number(x.kemeny, 17) << ','
                << format_number(x.multiplicative, 17) << ',' << format_number(x.additive, 17) << ','
                << format_number(x.kirchhoff, 17) << '\n';
    } else {
      row(std::to_string(k), {std::to_string(counts.nodes), std::to_string(counts.edges), num(x.kemeny),
                              num(x.multiplicative), num(x.additive), num(x.kirchhoff)});
    }
  }
  if (a.format == "json") std::cout << json{{"q", a.q}, {"rows", rows}}.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-triangulation spectra, walk metrics and closed-form cross-checks"};
  app.require_subcommand(1);

  TriangulateArgs tri;
  auto* c_tri = app.add_subcommand("triangulate", "Build R_q(G) (or R_{q,k}(G)) and print edge list plus provenance");
  c_tri->add_option("--graph", tri.graph, "Edge-list file or builtin (k2, k3, cycle:N, path:N, star:N)")->required();
  c_tri->add_option("--q", tri.q, "Copies per edge")->required();
  c_tri->add_option("--k", tri.k, "Number of iterations")->capture_default_str();
  c_tri->add_option("--format", tri.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  MetricsArgs met;
  auto* c_met = app.add_subcommand("metrics", "Hitting times, Kemeny constant and Kirchhoff indices by both routes");
  c_met->add_option("--graph", met.graph, "Edge-list file or builtin")->required();
  c_met->add_option("--format", met.format)->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();
  c_met->add_option("--csv-dir", met.csv_dir, "Write one CSV file per matrix into this directory");

  TransferArgs tra;
  auto* c_tra = app.add_subcommand("transfer", "Closed-form transfers to R_q(G) next to oracle values");
  c_tra->add_option("--graph", tra.graph, "Edge-list file or builtin")->required();
  c_tra->add_option("--q", tra.q, "Copies per edge")->required();
  c_tra->add_option("--from", tra.from, "Node of R_q(G) for a two-node comparison");
  c_tra->add_option("--to", tra.to, "Node of R_q(G) for a two-node comparison");
  c_tra->add_option("--format", tra.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  SpectrumArgs spe;
  auto* c_spe = app.add_subcommand("spectrum", "Spectrum of P for G, or the lifted spectrum of R_q(G)");
  c_spe->add_option("--graph", spe.graph, "Edge-list file or builtin")->required();
  c_spe->add_option("--q", spe.q, "Lift to R_q(G)");
  c_spe->add_option("--format", spe.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Run the cross-check suites");
  c_ver->add_option("--seed", ver.options.seed)->capture_default_str();
  c_ver->add_option("--trials", ver.options.trials, "Random graphs in the corpus")->capture_default_str();
  c_ver->add_option("--nmax", ver.options.nmax, "Largest random graph")->capture_default_str();
  c_ver->add_option("--qmax", ver.options.qmax)->capture_default_str();
  c_ver->add_option("--kmax", ver.options.kmax, "Largest iteration count")->capture_default_str();
  c_ver->add_option("--graph", ver.graph, "Check this graph instead of the random corpus");
  c_ver->add_option("--q", ver.q, "Check only this q");
  c_ver->add_option("--mutate", ver.mutate, "Scale one formula term by 1.01 (see --list-mutations)");
  c_ver->add_flag("--list-mutations", ver.list_mutations, "Print the formula term names and exit");
  c_ver->add_flag("--stop-on-failure", ver.options.stop_on_failure);
  c_ver->add_option("--format", ver.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  PseudofractalArgs web;
  auto* c_web = app.add_subcommand("pseudofractal", "Closed-form table for N_{q,k}, k = 0..kmax");
  c_web->add_option("--q", web.q)->required();
  c_web->add_option("--kmax", web.kmax)->required();
  c_web->add_option("--format", web.format)->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*c_tri) return cmd_triangulate(tri);
    if (*c_met) return cmd_metrics(met);
    if (*c_tra) return cmd_transfer(tra);
    if (*c_spe) return cmd_spectrum(spe);
    if (*c_ver) return cmd_verify(ver);
    if (*c_web) return cmd_pseudofractal(web);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_numerical(e.kind()) ? kExitNumerical : kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
