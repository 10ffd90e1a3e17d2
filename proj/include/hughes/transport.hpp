#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hughes/flux.hpp"
#include "hughes/graph.hpp"

namespace hughes {

enum class BoundaryMode { NoFlux, Dirichlet };

std::string_view to_string(BoundaryMode mode) noexcept;
BoundaryMode parse_boundary_mode(std::string_view name);

/// Band within which densities slightly outside [0, 1] count as rounding.
inline constexpr double kBoundsBand = 1e-12;

struct StepParams {
  /// dt / dx.
  double lambda = 0.0;
  FluxScheme scheme = FluxScheme::engquist_osher();
  BoundaryMode bc = BoundaryMode::NoFlux;
  /// Diffusion coefficient; the per-edge heat-step weight is epsilon * diffusion_ratio.
  double epsilon = 0.0;
  double diffusion_ratio = 0.0;
  /// Restrict diffusion to edges with nonzero orientation.
  bool oriented_diffusion = false;
};

/// delta_yx for every adjacency slot: slot offset(x) + j holds
/// sgn(u(y) - u(x)) for y = neighbors(x)[j].
struct Orientation {
  std::vector<std::int8_t> delta;

  int at(const WeightedGraph& g, Index x, Index j) const { return delta[g.offset(x) + j]; }
};

Orientation orientation_from_potential(const WeightedGraph& g, const PotentialField& u);

/// Throws CflViolation unless lambda * D * |m| <= 1, and
/// DiffusionCflViolation unless epsilon * diffusion_ratio * D <= 1/2.
void check_step_params(const StepParams& p, Index max_deg);

/// One explicit step of the conservation law with orientation from u:
/// rho'(x) = rho(x) + lambda * sum_{y~x} h_yx delta_yx, followed by zeroing
/// of the boundary under Dirichlet. No diffusion is applied.
DensityField transport_update(const WeightedGraph& g, const DensityField& rho,
                              const PotentialField& u, const StepParams& p);

/// Same update with a prescribed orientation field.
DensityField transport_update(const WeightedGraph& g, const DensityField& rho,
                              const Orientation& orientation, const StepParams& p);

/// Explicit graph-heat step rho'(x) = rho(x) + epsilon * diffusion_ratio *
/// sum_{y~x} (rho(y) - rho(x)) on interior vertices. NoFlux drops edges that
/// touch the boundary; Dirichlet keeps them with the boundary held at 0 and
/// then zeroes the boundary. `orientation` is only read when
/// p.oriented_diffusion is set.
DensityField apply_diffusion(const WeightedGraph& g, const DensityField& rho,
                             const StepParams& p, const Orientation* orientation = nullptr);

struct StepResult {
  DensityField rho;
  /// Mass entering each boundary vertex during the step, in g.boundary() order.
  Field<double> boundary_inflow;
};

/// Full density update used by the coupled loop: orientation from u,
/// transport, diffusion when epsilon > 0, Dirichlet zeroing.
StepResult advance_density(const WeightedGraph& g, const DensityField& rho,
                           const PotentialField& u, const StepParams& p);

}  // namespace hughes
