#include "hughes/eikonal.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hughes {

void EikonalOptions::validate() const {
  if (!(tolerance >= 0.0)) throw Error(ErrorKind::ScenarioInvalid, "eikonal tolerance must be >= 0");
  if (max_iterations < 0) throw Error(ErrorKind::ScenarioInvalid, "eikonal max_iterations must be >= 1");
  if (!(density_floor > 0.0 && density_floor < 1.0)) {
    throw Error(ErrorKind::ScenarioInvalid, "density floor must lie in (0, 1)");
  }
}

namespace {

void check_density(const WeightedGraph& g, const DensityField& rho) {
  if (rho.size() != g.vertex_count()) {
    throw Error(ErrorKind::DomainError, "density field has " + std::to_string(rho.size()) +
                                            " entries for " + std::to_string(g.vertex_count()) +
                                            " vertices");
  }
  for (Index x = 0; x < rho.size(); ++x) {
    if (!(rho[x] >= 0.0 && rho[x] <= 1.0)) {
      throw Error(ErrorKind::DomainError,
                  "density at vertex " + std::to_string(x) + " is " + std::to_string(rho[x]));
    }
  }
}

Field<double> crossing_costs(const DensityField& rho, double floor) {
  return rho.unaryExpr([floor](double r) { return vertex_cost(r, floor); });
}

}  // namespace

double cost_bound(const DensityField& rho, double density_floor) {
  return 1.0 / std::max(density_floor, 1.0 - rho.maxCoeff());
}

PotentialField eikonal_oracle(const WeightedGraph& g, const DensityField& rho,
                              double density_floor) {
  check_density(g, rho);
  const Field<double> cost = crossing_costs(rho, density_floor);
  // Reaching `settled` from its neighbor pays the weight times the cost of
  // the vertex being entered.
  return multi_source_distance(
      g, g.boundary(), [&cost](Index settled, Index, double w) { return w * cost[settled]; });
}

EikonalResult value_iteration_from(const WeightedGraph& g, const DensityField& rho,
                                   const PotentialField& start, const EikonalOptions& opts) {
  opts.validate();
  check_density(g, rho);
  if (start.size() != g.vertex_count()) {
    throw Error(ErrorKind::DomainError, "initial guess has the wrong size");
  }
  const Index n = g.vertex_count();
  const Index max_iter = opts.max_iterations > 0 ? opts.max_iterations : 10 * n;

  EikonalResult result;
  result.cost_capped = (rho.array() >= 1.0 - opts.density_floor).any();
  const Field<double> cost = crossing_costs(rho, opts.density_floor);

  PotentialField current = start;
  for (Index b : g.boundary()) current[b] = 0.0;
  PotentialField next(n);

  for (Index k = 1; k <= max_iter; ++k) {
    double change = 0.0;
    for (Index x = 0; x < n; ++x) {
      if (g.is_boundary(x)) {
        next[x] = 0.0;
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      for (const Neighbor& nb : g.neighbors(x)) {
        best = std::min(best, current[nb.vertex] + nb.weight * cost[nb.vertex]);
      }
      next[x] = best;
      const double diff = std::abs(best - current[x]);
      // inf - inf is NaN; treat an unreached vertex as still moving.
      change = std::max(change, std::isnan(diff) ? std::numeric_limits<double>::infinity() : diff);
    }
    current.swap(next);
    if (change <= opts.tolerance) {
      result.u = std::move(current);
      result.iterations = k;
      return result;
    }
  }
  throw Error(ErrorKind::NoConvergence,
              "value iteration did not reach tolerance " + std::to_string(opts.tolerance) +
                  " within " + std::to_string(max_iter) + " sweeps");
}

EikonalResult value_iteration(const WeightedGraph& g, const DensityField& rho,
                              const EikonalOptions& opts) {
  PotentialField upper = eikonal_oracle(g, rho, opts.density_floor);
  // Sweeps from below climb by about 2 w min(cost) per sweep, so entries of
  // the warm start that undershoot are lifted to the oracle value; from an
  // upper bound the iteration settles within |V| sweeps.
  if (opts.warm_start) {
    if (opts.warm_start->size() != g.vertex_count()) {
      throw Error(ErrorKind::DomainError, "warm start has the wrong size");
    }
    upper = upper.cwiseMax(*opts.warm_start);
  }
  return value_iteration_from(g, rho, upper, opts);
}

double check_hj_residual(const WeightedGraph& g, const DensityField& rho, const PotentialField& u,
                         double density_floor) {
  double residual = 0.0;
  for (Index x : g.interior()) {
    double hamiltonian = -std::numeric_limits<double>::infinity();
    for (const Neighbor& nb : g.neighbors(x)) {
      const double term =
          -(u[nb.vertex] - u[x]) / nb.weight - vertex_cost(rho[nb.vertex], density_floor);
      hamiltonian = std::max(hamiltonian, term);
    }
    residual = std::max(residual, std::abs(hamiltonian));
  }
  return residual;
}

}  // namespace hughes
