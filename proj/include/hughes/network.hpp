#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hughes/flux.hpp"
#include "hughes/graph.hpp"

namespace hughes {

using Coordinates = Eigen::Matrix<double, Eigen::Dynamic, 2>;

struct NetworkNode {
  std::string id;
  double x1 = 0.0;
  double x2 = 0.0;
};

struct NetworkEdge {
  std::string a;
  std::string b;
  /// Defaults to the Euclidean distance between the endpoints.
  std::optional<double> length;
};

/// Geometric network of straight segments, discretized uniformly with step dx.
struct NetworkSpec {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge> edges;
  std::vector<std::string> targets;
  double dx = 0.0;
};

struct DiscreteNetwork {
  WeightedGraph graph;
  Coordinates coords;
  /// Network node id -> graph vertex.
  std::map<std::string, Index> node_vertex;
  Index max_degree = 0;
};

/// Splits every edge of length l into k = round(l / dx) >= 1 segments of
/// weight l / k. Network nodes keep vertex indices 0..nodes-1 in input order;
/// edge-interior points follow, edge by edge. Target nodes form the boundary.
DiscreteNetwork discretize(const NetworkSpec& spec);

/// Closed-form density over (x1, x2): numbers, x1/x2 (or x/y), + - *,
/// integer powers via ^, parentheses, max(...) and min(...).
class DensityExpr {
 public:
  static DensityExpr parse(std::string_view text);

  double operator()(double x1, double x2) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  DensityExpr(std::string text, std::shared_ptr<const Node> root)
      : text_(std::move(text)), root_(std::move(root)) {}

  std::string text_;
  std::shared_ptr<const Node> root_;
};

/// Evaluates expr at every vertex; throws DensityOutOfRange unless every
/// value lies in [0, 1).
DensityField sample_density(const DensityExpr& expr, const Coordinates& coords);

enum class DiffusionScaling {
  /// diffusion_ratio = lambda * |m| / 2: epsilon = 1 adds one Lax-Friedrichs
  /// viscosity's worth of graph-Laplacian smoothing per step.
  Viscosity,
  /// diffusion_ratio = dt / dx^2.
  Physical,
};

std::string_view to_string(DiffusionScaling scaling) noexcept;
DiffusionScaling parse_diffusion_scaling(std::string_view name);

struct StabilityReport {
  double lambda = 0.0;
  double diffusion_ratio = 0.0;
  /// lambda * D * |m|.
  double cfl_number = 0.0;
  /// True when the CFL inequality holds with equality; strict density
  /// bounds are then not guaranteed.
  bool cfl_marginal = false;
  double max_dt = 0.0;
};

/// lambda = dt / dx. Accepts iff lambda * D * |m| <= 1 and, for epsilon > 0,
/// epsilon * diffusion_ratio * D <= 1/2. Errors name the largest admissible dt.
StabilityReport validate_stability(double dx, double dt, Index max_deg, double epsilon,
                                   const FluxScheme& scheme,
                                   DiffusionScaling scaling = DiffusionScaling::Viscosity);

/// Ring-and-radial network with exits on spokes past the outer ring.
struct StadiumOptions {
  Index rings = 6;
  Index spokes = 24;
  double inner_radius = 0.5;
  double ring_spacing = 0.25;
  /// Horizontal stretch of the rings.
  double aspect = 1.2;
  double exit_length = 0.15;
  /// Spoke indices carrying an exit.
  std::vector<Index> exit_spokes = {0, 2, 5, 8, 10, 13, 16, 18, 21};
  double dx = 0.01;
};

NetworkSpec stadium_network(const StadiumOptions& opts);

}  // namespace hughes
