#pragma once

#include <algorithm>
#include <optional>

#include "hughes/graph.hpp"

namespace hughes {

struct EikonalOptions {
  double tolerance = 1e-10;
  /// 0 selects the default of 10 |V| sweeps.
  Index max_iterations = 0;
  std::optional<PotentialField> warm_start;
  double density_floor = 1e-9;

  void validate() const;
};

struct EikonalResult {
  PotentialField u;
  Index iterations = 0;
  /// Set when some density reached 1 - density_floor and the cost cap was used.
  bool cost_capped = false;
};

/// Crossing cost 1 / max(1 - rho, floor); lies in [1, 1/floor].
inline double vertex_cost(double rho, double density_floor) {
  return 1.0 / std::max(1.0 - rho, density_floor);
}

/// Jacobi value iteration v <- min_{y~x} { v(y) + w_yx cost(rho(y)) }, with v
/// pinned to 0 on the boundary, until the sup-norm change is <= tolerance.
/// Starts from the pointwise max of opts.warm_start and the shortest-path
/// solution (the latter alone without a warm start). Throws NoConvergence
/// after max_iterations sweeps.
EikonalResult value_iteration(const WeightedGraph& g, const DensityField& rho,
                              const EikonalOptions& opts);

/// Same sweep as value_iteration, starting from an explicit guess.
EikonalResult value_iteration_from(const WeightedGraph& g, const DensityField& rho,
                                   const PotentialField& start, const EikonalOptions& opts);

/// Representation formula: minimal density-weighted path cost to the
/// boundary, computed by a multi-source label-setting search.
PotentialField eikonal_oracle(const WeightedGraph& g, const DensityField& rho,
                              double density_floor = 1e-9);

/// max over interior x of | max_{y~x} { -(u(y) - u(x)) / w_yx - cost(rho(y)) } |.
double check_hj_residual(const WeightedGraph& g, const DensityField& rho, const PotentialField& u,
                         double density_floor = 1e-9);

/// Bound M = 1 / max(floor, 1 - max rho) on the crossing cost.
double cost_bound(const DensityField& rho, double density_floor);

}  // namespace hughes
