#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hughes/coupler.hpp"
#include "hughes/network.hpp"

namespace hughes {

/// Graph given directly as vertex, edge and boundary lists.
struct ExplicitGraphSpec {
  Index vertices = 0;
  std::vector<EdgeSpec> edges;
  std::vector<Index> boundary;
  /// Optional per-vertex positions used for snapshots and frames.
  std::optional<Coordinates> coordinates;
};

struct ScenarioConfig {
  std::string name;

  std::optional<NetworkSpec> network;
  std::optional<ExplicitGraphSpec> graph;

  std::optional<DensityExpr> density_expression;
  std::optional<std::vector<double>> density_values;

  FluxScheme scheme = FluxScheme::engquist_osher();
  BoundaryMode bc = BoundaryMode::NoFlux;
  double dx = 0.0;
  double dt = 0.0;
  double t_end = 0.0;

  double epsilon = 0.0;
  DiffusionScaling diffusion_scaling = DiffusionScaling::Viscosity;
  bool oriented_diffusion = false;

  EikonalOptions eikonal;
  StopRules stop;
  bool monitor_invariants = true;

  Index snapshot_stride = 50;
  std::filesystem::path output_dir = "out";
  bool frames = false;

  /// The parsed document, re-serialized, for the run summary.
  std::string echo;
};

/// Parses the JSON scenario format documented in scenarios/README.md.
/// Throws ParseError (with line/column) or ScenarioInvalid (with the
/// offending key path).
ScenarioConfig parse_scenario(std::string_view text, std::string_view origin = "<string>");
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Everything needed to run: graph, geometry, initial datum and loop settings.
struct Problem {
  WeightedGraph graph;
  Coordinates coords;
  /// One label per boundary vertex, in graph.boundary() order.
  std::vector<std::string> exit_labels;
  DensityField rho0;
  RunConfig run;
  StabilityReport stability;
};

/// Builds the graph, samples the initial density and validates stability.
Problem build_problem(const ScenarioConfig& config);

/// build_problem followed by the coupled loop.
Trajectory run(const ScenarioConfig& config);

}  // namespace hughes
