#include <doctest.h>

#include <cmath>

#include "hughes/network.hpp"

using namespace hughes;

namespace {

NetworkSpec star(double dx) {
  NetworkSpec s;
  s.nodes = {{"J", 0.2, 0.0}, {"W", -1.0, 0.0}, {"N", 0.2, 0.8}, {"S", 0.2, -0.8}, {"E", 0.8, 0.0}};
  s.edges = {{"W", "J", {}}, {"N", "J", {}}, {"J", "S", {}}, {"J", "E", {}}};
  s.targets = {"S", "E"};
  s.dx = dx;
  return s;
}

double total_weight(const WeightedGraph& g) {
  double sum = 0.0;
  for (const EdgeSpec& e : g.edges()) sum += e.weight;
  return sum;
}

ErrorKind kind_of(const NetworkSpec& s) {
  try {
    discretize(s);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("network accepted");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("single segment becomes a uniform chain") {
  NetworkSpec s;
  s.nodes = {{"a", 0.0, 0.0}, {"b", 1.0, 0.0}};
  s.edges = {{"a", "b", {}}};
  s.targets = {"b"};
  s.dx = 0.25;
  const DiscreteNetwork net = discretize(s);
  CHECK(net.graph.vertex_count() == 5);
  CHECK(net.graph.edge_count() == 4);
  for (const EdgeSpec& e : net.graph.edges()) CHECK(e.weight == doctest::Approx(0.25));
  REQUIRE(net.graph.boundary().size() == 1);
  CHECK(net.graph.boundary()[0] == net.node_vertex.at("b"));
  CHECK(net.coords(net.node_vertex.at("b"), 0) == 1.0);
  CHECK(net.max_degree == 2);
}

TEST_CASE("segment counts round to nearest and keep the length") {
  NetworkSpec s;
  s.nodes = {{"a", 0.0, 0.0}, {"b", 1.0, 0.0}};
  s.edges = {{"a", "b", {}}};
  s.targets = {"a"};
  s.dx = 0.3;
  const DiscreteNetwork net = discretize(s);
  CHECK(net.graph.edge_count() == 3);
  for (const EdgeSpec& e : net.graph.edges()) CHECK(e.weight == doctest::Approx(1.0 / 3.0));
  CHECK(total_weight(net.graph) == doctest::Approx(1.0));

  s.edges[0].length = 2.0;
  const DiscreteNetwork stretched = discretize(s);
  CHECK(stretched.graph.edge_count() == 7);
  CHECK(total_weight(stretched.graph) == doctest::Approx(2.0));
}

TEST_CASE("five-node star") {
  const DiscreteNetwork net = discretize(star(0.01));
  CHECK(net.max_degree == 4);
  CHECK(max_degree(net.graph) == 4);
  CHECK(net.graph.degree(net.node_vertex.at("J")) == 4);
  CHECK(net.graph.vertex_count() == 341);
  CHECK(total_weight(net.graph) == doctest::Approx(1.2 + 0.8 + 0.8 + 0.6));
  for (Index v = 5; v < net.graph.vertex_count(); ++v) CHECK(net.graph.degree(v) == 2);
}

TEST_CASE("network errors") {
  NetworkSpec s = star(0.01);
  s.targets = {"Q"};
  CHECK(kind_of(s) == ErrorKind::ScenarioInvalid);
  s = star(0.01);
  s.edges.push_back({"J", "W", {}});
  CHECK(kind_of(s) == ErrorKind::DuplicateEdge);
  s = star(0.01);
  s.edges[0].length = 0.0;
  CHECK(kind_of(s) == ErrorKind::NonPositiveWeight);
  s = star(2.0);
  CHECK(kind_of(s) == ErrorKind::DegenerateEdge);
  s = star(0.01);
  s.nodes.push_back({"J", 0.0, 0.0});
  CHECK(kind_of(s) == ErrorKind::ScenarioInvalid);
}

TEST_CASE("density expressions") {
  const auto test1 = DensityExpr::parse(
      "max(0, 0.65 - 4*(x1+1)^2 - 4*x2^2, 0.75 - (6*(x1-0.2))^2 - (6*(x2-0.8))^2)");
  CHECK(test1(-1.0, 0.0) == doctest::Approx(0.65));
  CHECK(test1(0.2, 0.8) == doctest::Approx(0.75));
  CHECK(test1(0.8, 0.0) == 0.0);

  const auto stadium = DensityExpr::parse("max(0, 0.7 - 0.7*x^2 - 0.84*y^2)");
  CHECK(stadium(0.0, 0.0) == doctest::Approx(0.7));
  CHECK(stadium(1.0, 0.0) == doctest::Approx(0.0));

  CHECK(DensityExpr::parse("-2^2")(0, 0) == doctest::Approx(-4.0));
  CHECK(DensityExpr::parse("min(0.3, x) * 2")(0.1, 0) == doctest::Approx(0.2));
  CHECK(DensityExpr::parse(" 1.5e-1 ")(0, 0) == doctest::Approx(0.15));
  CHECK(DensityExpr::parse("x^0")(5.0, 0) == 1.0);
  CHECK(DensityExpr::parse("0").text() == "0");

  for (const char* bad : {"", "x +", "max(1", "2 ^ 0.5", "z", "x^17", "(x", "1 2", "max()"}) {
    CHECK_THROWS_AS(DensityExpr::parse(bad), Error);
  }
}

TEST_CASE("sampling a density") {
  Coordinates c(3, 2);
  c << -1.0, 0.0, 0.2, 0.8, 0.8, 0.0;
  const DensityField zero = sample_density(DensityExpr::parse("0"), c);
  CHECK(zero.cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(sample_density(DensityExpr::parse("1"), c), Error);
  CHECK_THROWS_AS(sample_density(DensityExpr::parse("x"), c), Error);
}

TEST_CASE("stability check") {
  const StabilityReport ok =
      validate_stability(0.01, 0.002, 4, 0.0, FluxScheme::engquist_osher());
  CHECK(ok.lambda == doctest::Approx(0.2));
  CHECK(ok.cfl_number == doctest::Approx(0.8));
  CHECK_FALSE(ok.cfl_marginal);
  CHECK(ok.max_dt == doctest::Approx(0.0025));

  try {
    validate_stability(0.01, 0.003, 4, 0.0, FluxScheme::engquist_osher());
    FAIL("unstable step accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CflViolation);
    CHECK(std::string(e.what()).find("0.0025") != std::string::npos);
  }

  const StabilityReport edge = validate_stability(0.1, 0.1, 1, 0.0, FluxScheme::godunov());
  CHECK(edge.cfl_number == doctest::Approx(1.0));
  CHECK(edge.cfl_marginal);

  const StabilityReport visc =
      validate_stability(0.01, 0.002, 4, 1.0, FluxScheme::engquist_osher());
  CHECK(visc.diffusion_ratio == doctest::Approx(0.1));

  CHECK_THROWS_AS(validate_stability(0.01, 0.002, 4, 1.0, FluxScheme::engquist_osher(),
                                     DiffusionScaling::Physical),
                  Error);
  const StabilityReport phys = validate_stability(0.01, 0.002, 4, 0.005,
                                                  FluxScheme::engquist_osher(),
                                                  DiffusionScaling::Physical);
  CHECK(phys.diffusion_ratio == doctest::Approx(20.0));

  CHECK_THROWS_AS(validate_stability(0.0, 0.002, 4, 0.0, FluxScheme::godunov()), Error);
  CHECK_THROWS_AS(validate_stability(0.01, -1.0, 4, 0.0, FluxScheme::godunov()), Error);
}

TEST_CASE("stadium generator") {
  const NetworkSpec spec = stadium_network({});
  const DiscreteNetwork net = discretize(spec);
  CHECK(net.graph.vertex_count() > 6000);
  CHECK(net.graph.vertex_count() < 9000);
  CHECK(net.graph.boundary().size() == 9);
  CHECK(net.max_degree == 4);
  CHECK(net.node_vertex.count("exit0") == 1);
}
