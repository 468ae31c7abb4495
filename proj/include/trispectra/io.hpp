#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "trispectra/graph.hpp"
#include "trispectra/spectral.hpp"
#include "trispectra/triangulation.hpp"
#include "trispectra/walk_metrics.hpp"

namespace trispectra {

/// Reads the edge-list format: a header line `n m`, then m lines `i j`.
/// Blank lines and everything after `#` are ignored. `source` names the
/// input in error messages. Throws ParseError with the offending line number.
Graph parse_edge_list(std::istream& in, std::string_view source = "input");

/// parse_edge_list on a file; FileNotFound if it cannot be opened.
Graph read_edge_list(const std::string& path);

/// k2, k3, cycle:N, path:N, star:N (node 1 is the centre of N leaves).
bool is_builtin_graph_name(std::string_view name);
Graph builtin_graph(std::string_view name);

/// A builtin name if it parses as one, otherwise a file path.
Graph load_graph(const std::string& name_or_path);

void write_edge_list(std::ostream& out, const Graph& g);

/// One line `new_node generator_edge copy` per new node, after a header.
void write_provenance(std::ostream& out, const TriangulationResult& tri);

/// %.*g formatting.
std::string format_number(double value, int digits = 12);

/// Comma-separated rows with 17 significant digits.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);

nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const Eigen::MatrixXd& m);
nlohmann::json graph_json(const Graph& g);

/// {eigenvalues: [...], branch: [...]}; base spectra report branch "base".
nlohmann::json spectrum_json(const Spectrum& spec);
nlohmann::json spectrum_json(const LiftedSpectrum& lifted);

nlohmann::json metrics_json(const MetricsReport& report);

}  // namespace trispectra
