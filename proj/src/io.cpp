#include "trispectra/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "trispectra/error.hpp"

namespace trispectra {

namespace {

[[noreturn]] void parse_failure(std::string_view source, int line, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "parse error line " + std::to_string(line) + " of " + std::string(source) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

std::optional<long long> parse_integer(std::string_view text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

int parse_count(std::string_view source, int line, std::string_view text, const char* what) {
  const auto value = parse_integer(text);
  if (!value || *value < 0 || *value > 100'000'000) {
    parse_failure(source, line, std::string("expected a non-negative ") + what + ", got '" +
                                    std::string(text) + "'");
  }
  return static_cast<int>(*value);
}

int builtin_size(std::string_view name, std::string_view prefix, int minimum) {
  const auto value = parse_integer(name.substr(prefix.size()));
  if (!value || *value < minimum || *value > 1'000'000) {
    throw Error(ErrorKind::InvalidArgument, "builtin graph '" + std::string(name) + "' needs an integer >= " +
                                                std::to_string(minimum));
  }
  return static_cast<int>(*value);
}

}  // namespace

Graph parse_edge_list(std::istream& in, std::string_view source) {
  std::string line;
  int line_no = 0;
  int header_line = 0;
  int n = -1;
  int m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      parse_failure(source, line_no, "expected two integers, found " + std::to_string(toks.size()) + " fields");
    }
    if (n < 0) {
      n = parse_count(source, line_no, toks[0], "node count");
      m = parse_count(source, line_no, toks[1], "edge count");
      header_line = line_no;
      continue;
    }
    if (static_cast<int>(edges.size()) == m) {
      parse_failure(source, line_no, "more edge lines than the " + std::to_string(m) + " declared");
    }
    const auto a = parse_integer(toks[0]);
    const auto b = parse_integer(toks[1]);
    if (!a || !b || *a < 1 || *b < 1 || *a > n || *b > n) {
      parse_failure(source, line_no, "expected two node ids in 1.." + std::to_string(n) + ", got '" + toks[0] +
                                         " " + toks[1] + "'");
    }
    edges.emplace_back(static_cast<int>(*a), static_cast<int>(*b));
  }
  if (n < 0) parse_failure(source, std::max(line_no, 1), "missing header line 'n m'");
  if (static_cast<int>(edges.size()) != m) {
    parse_failure(source, header_line, "header declares " + std::to_string(m) + " edges, file has " +
                                           std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open '" + path + "'");
  return parse_edge_list(in, path);
}

bool is_builtin_graph_name(std::string_view name) {
  return name == "k2" || name == "k3" || name.starts_with("cycle:") || name.starts_with("path:") ||
         name.starts_with("star:");
}

Graph builtin_graph(std::string_view name) {
  std::vector<std::pair<int, int>> edges;
  if (name == "k2") return build_graph(2, {{1, 2}});
  if (name == "k3") return build_graph(3, {{1, 2}, {1, 3}, {2, 3}});
  if (name.starts_with("cycle:")) {
    const int n = builtin_size(name, "cycle:", 3);
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return Graph(n, edges);
  }
  if (name.starts_with("path:")) {
    const int n = builtin_size(name, "path:", 2);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
  }
  if (name.starts_with("star:")) {
    const int leaves = builtin_size(name, "star:", 1);
    for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
    return Graph(leaves + 1, edges);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown builtin graph '" + std::string(name) +
                                              "' (expected k2, k3, cycle:N, path:N or star:N)");
}

Graph load_graph(const std::string& name_or_path) {
  if (is_builtin_graph_name(name_or_path)) return builtin_graph(name_or_path);
  return read_edge_list(name_or_path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_provenance(std::ostream& out, const TriangulationResult& tri) {
  out << "# new_node generator_edge copy\n";
  for (int node = tri.base.node_count() + 1; node <= tri.graph.node_count(); ++node) {
    const auto origin = tri.origin(node);
    out << node << ' ' << origin.edge << ' ' << origin.copy << '\n';
  }
}

std::string format_number(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_number(m(r, c), 17);
    }
    out << '\n';
  }
}

nlohmann::json to_json(const Eigen::VectorXd& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

nlohmann::json to_json(const Eigen::MatrixXd& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Eigen::VectorXd(m.row(r).transpose())));
  return out;
}

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"edge_list", std::move(edges)}};
}

nlohmann::json spectrum_json(const Spectrum& spec) {
  return {{"eigenvalues", to_json(spec.eigenvalues)},
          {"branch", std::vector<std::string>(static_cast<std::size_t>(spec.eigenvalues.size()), "base")}};
}

nlohmann::json spectrum_json(const LiftedSpectrum& lifted) {
  nlohmann::json branch = nlohmann::json::array();
  for (const Branch b : lifted.branches) branch.push_back(std::string(to_string(b)));
  return {{"eigenvalues", to_json(lifted.spectrum.eigenvalues)},
          {"branch", std::move(branch)},
          {"source", lifted.source},
          {"q", lifted.q},
          {"bipartite", lifted.bipartite}};
}

nlohmann::json metrics_json(const MetricsReport& report) {
  return {{"route", std::string(to_string(report.route))},
          {"kemeny", report.kemeny},
          {"kirchhoff", report.indices.kirchhoff},
          {"additive", report.indices.additive},
          {"multiplicative", report.indices.multiplicative},
          {"hitting", to_json(report.hitting)},
          {"resistance", to_json(report.resistance)}};
}

}  // namespace trispectra
