#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "trispectra/error.hpp"
#include "trispectra/io.hpp"
#include "trispectra/triangulation.hpp"

using namespace trispectra;

namespace {

ErrorKind parse_kind(const std::string& text, std::string* message = nullptr) {
  std::istringstream in(text);
  try {
    parse_edge_list(in);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("no exception for: " << text);
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("edge-list parsing") {
  std::istringstream in("# a triangle\n3 3\n1 2\n\n2 3  # closing edge next\n3 1\n");
  const Graph g = parse_edge_list(in);
  CHECK(g.node_count() == 3);
  CHECK(g.edges() == builtin_graph("k3").edges());
}

TEST_CASE("edge-list errors report line numbers") {
  std::string msg;
  CHECK(parse_kind("3 2\n1 2\nx y\n", &msg) == ErrorKind::ParseError);
  CHECK(msg.find("parse error line 3") != std::string::npos);
  CHECK(parse_kind("3 2\n1 2 3\n", &msg) == ErrorKind::ParseError);
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(parse_kind("3 3\n1 2\n2 3\n", &msg) == ErrorKind::ParseError);
  CHECK(parse_kind("3 1\n1 2\n2 3\n", &msg) == ErrorKind::ParseError);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(parse_kind("", &msg) == ErrorKind::ParseError);
  CHECK(parse_kind("3 2\n1 4\n2 3\n") == ErrorKind::ParseError);
  CHECK(parse_kind("3 2\n1 1\n2 3\n") == ErrorKind::SelfLoop);
  CHECK(parse_kind("4 2\n1 2\n3 4\n") == ErrorKind::Disconnected);
}

TEST_CASE("missing files") {
  try {
    read_edge_list("/nonexistent/graph.txt");
    FAIL("expected FileNotFound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FileNotFound);
  }
}

TEST_CASE("builtin graphs") {
  CHECK(builtin_graph("cycle:5").edge_count() == 5);
  CHECK(builtin_graph("path:4").edge_count() == 3);
  const Graph star = builtin_graph("star:3");
  CHECK(star.node_count() == 4);
  CHECK(star.degree(1) == 3);
  CHECK_THROWS_AS(builtin_graph("cycle:2"), Error);
  CHECK_THROWS_AS(builtin_graph("wheel:5"), Error);
  CHECK_FALSE(is_builtin_graph_name("graph.txt"));
}

TEST_CASE("edge-list round trip and provenance table") {
  const auto tri = q_triangulate(builtin_graph("k3"), 2);
  std::ostringstream out;
  write_edge_list(out, tri.graph);
  std::istringstream in(out.str());
  CHECK(parse_edge_list(in).edges() == tri.graph.edges());

  std::ostringstream prov;
  write_provenance(prov, tri);
  std::istringstream lines(prov.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "# new_node generator_edge copy");
  int node = 0, edge = 0, copy = 0, rows = 0;
  while (lines >> node >> edge >> copy) {
    CHECK(tri.origin(node) == NewNodeOrigin{edge, copy});
    ++rows;
  }
  CHECK(rows == 6);
}

TEST_CASE("JSON emission round-trips doubles") {
  const Graph k3 = builtin_graph("k3");
  const Spectrum spec = eigendecompose(k3);
  const auto parsed = nlohmann::json::parse(spectrum_json(spec).dump());
  REQUIRE(parsed["eigenvalues"].size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(parsed["eigenvalues"][i].get<double>() == spec.eigenvalues(i));
  CHECK(parsed["branch"][0] == "base");

  const LiftedSpectrum lifted = lift_spectrum(spec, k3, 1);
  const auto lj = spectrum_json(lifted);
  CHECK(lj["branch"].size() == 6);
  CHECK(lj["branch"][0] == "plus");
}

TEST_CASE("number formatting") {
  CHECK(format_number(4.0 / 3.0) == "1.33333333333");
  CHECK(format_number(0.1, 17) == "0.10000000000000001");
  std::ostringstream csv;
  write_matrix_csv(csv, Eigen::MatrixXd::Identity(2, 2));
  CHECK(csv.str() == "1,0\n0,1\n");
}
