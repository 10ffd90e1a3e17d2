#include "hughes/transport.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace hughes {

std::string_view to_string(BoundaryMode mode) noexcept {
  return mode == BoundaryMode::Dirichlet ? "dirichlet" : "no-flux";
}

BoundaryMode parse_boundary_mode(std::string_view name) {
  if (name == "no-flux") return BoundaryMode::NoFlux;
  if (name == "dirichlet") return BoundaryMode::Dirichlet;
  throw Error(ErrorKind::ScenarioInvalid, "unknown boundary mode '" + std::string(name) + "'");
}

Orientation orientation_from_potential(const WeightedGraph& g, const PotentialField& u) {
  Orientation o;
  o.delta.resize(static_cast<std::size_t>(g.slot_count()));
  for (Index x = 0; x < g.vertex_count(); ++x) {
    const auto nbs = g.neighbors(x);
    for (std::size_t j = 0; j < nbs.size(); ++j) {
      o.delta[g.offset(x) + j] = static_cast<std::int8_t>(orientation(u[nbs[j].vertex], u[x]));
    }
  }
  return o;
}

void check_step_params(const StepParams& p, Index max_deg) {
  // Relative slack so that dt = dx / D is accepted despite rounding in dt / dx.
  constexpr double slack = 1e-12;
  if (!(p.lambda > 0.0)) throw Error(ErrorKind::CflViolation, "lambda must be positive");
  const double cfl = p.lambda * double(max_deg) * kFluxSpeedBound;
  if (cfl > 1.0 + slack) {
    std::ostringstream msg;
    msg << "lambda * D * |m| = " << cfl << " > 1 (lambda = " << p.lambda << ", D = " << max_deg
        << ")";
    throw Error(ErrorKind::CflViolation, msg.str());
  }
  if (p.epsilon < 0.0) throw Error(ErrorKind::DiffusionCflViolation, "epsilon must be >= 0");
  if (p.epsilon > 0.0) {
    const double heat = p.epsilon * p.diffusion_ratio * double(max_deg);
    if (heat > 0.5 + slack) {
      std::ostringstream msg;
      msg << "epsilon * diffusion_ratio * D = " << heat << " > 1/2";
      throw Error(ErrorKind::DiffusionCflViolation, msg.str());
    }
  }
}

namespace {

void check_size(const WeightedGraph& g, const DensityField& rho) {
  if (rho.size() != g.vertex_count()) {
    throw Error(ErrorKind::DomainError, "density field size does not match the graph");
  }
}

// Bounds check with the rounding band; values inside the band are clamped.
void enforce_bounds(DensityField& rho, std::string_view stage) {
  for (Index x = 0; x < rho.size(); ++x) {
    const double r = rho[x];
    if (!(r >= -kBoundsBand && r <= 1.0 + kBoundsBand)) {
      std::ostringstream msg;
      msg << stage << " produced density " << r << " at vertex " << x;
      throw Error(ErrorKind::BoundsViolation, msg.str());
    }
    rho[x] = std::clamp(r, 0.0, 1.0);
  }
}

DensityField transport_flux(const WeightedGraph& g, const DensityField& rho,
                            const Orientation& orientation, const StepParams& p) {
  check_size(g, rho);
  check_step_params(p, max_degree(g));
  DensityField next(rho.size());
  for (Index x = 0; x < g.vertex_count(); ++x) {
    const auto nbs = g.neighbors(x);
    double net = 0.0;
    for (std::size_t j = 0; j < nbs.size(); ++j) {
      const int delta = orientation.delta[g.offset(x) + j];
      if (delta == 0) continue;
      net += oriented_flux(p.scheme, rho[nbs[j].vertex], rho[x], delta) * delta;
    }
    next[x] = rho[x] + p.lambda * net;
  }
  enforce_bounds(next, "transport");
  return next;
}

void zero_boundary(const WeightedGraph& g, DensityField& rho) {
  for (Index b : g.boundary()) rho[b] = 0.0;
}

bool diffuses_across(const WeightedGraph& g, const StepParams& p, const Orientation* orientation,
                     Index x, std::size_t j) {
  const Index y = g.neighbors(x)[j].vertex;
  if (p.bc == BoundaryMode::NoFlux && g.is_boundary(y)) return false;
  if (p.oriented_diffusion && orientation->delta[g.offset(x) + j] == 0) return false;
  return true;
}

}  // namespace

DensityField transport_update(const WeightedGraph& g, const DensityField& rho,
                              const Orientation& orientation, const StepParams& p) {
  DensityField next = transport_flux(g, rho, orientation, p);
  if (p.bc == BoundaryMode::Dirichlet) zero_boundary(g, next);
  return next;
}

DensityField transport_update(const WeightedGraph& g, const DensityField& rho,
                              const PotentialField& u, const StepParams& p) {
  return transport_update(g, rho, orientation_from_potential(g, u), p);
}

DensityField apply_diffusion(const WeightedGraph& g, const DensityField& rho,
                             const StepParams& p, const Orientation* orientation) {
  check_size(g, rho);
  check_step_params(p, max_degree(g));
  if (p.oriented_diffusion && orientation == nullptr) {
    throw Error(ErrorKind::DomainError, "oriented diffusion needs an orientation field");
  }
  DensityField next = rho;
  if (p.bc == BoundaryMode::Dirichlet) zero_boundary(g, next);
  if (p.epsilon == 0.0) return next;

  const double c = p.epsilon * p.diffusion_ratio;
  for (Index x : g.interior()) {
    const auto nbs = g.neighbors(x);
    double laplacian = 0.0;
    for (std::size_t j = 0; j < nbs.size(); ++j) {
      if (!diffuses_across(g, p, orientation, x, j)) continue;
      const Index y = nbs[j].vertex;
      const double other = g.is_boundary(y) ? 0.0 : rho[y];
      laplacian += other - rho[x];
    }
    next[x] = rho[x] + c * laplacian;
  }
  enforce_bounds(next, "diffusion");
  return next;
}

StepResult advance_density(const WeightedGraph& g, const DensityField& rho,
                           const PotentialField& u, const StepParams& p) {
  const Orientation orientation = orientation_from_potential(g, u);
  const DensityField moved = transport_flux(g, rho, orientation, p);

  StepResult out;
  out.boundary_inflow.resize(static_cast<Index>(g.boundary().size()));
  for (std::size_t i = 0; i < g.boundary().size(); ++i) {
    const Index b = g.boundary()[i];
    out.boundary_inflow[i] = moved[b] - rho[b];
  }

  if (p.epsilon > 0.0) {
    if (p.bc == BoundaryMode::Dirichlet) {
      // Interior mass diffusing onto a held-at-zero exit leaves the network there.
      const double c = p.epsilon * p.diffusion_ratio;
      for (std::size_t i = 0; i < g.boundary().size(); ++i) {
        const Index b = g.boundary()[i];
        const auto nbs = g.neighbors(b);
        double outflow = 0.0;
        for (std::size_t j = 0; j < nbs.size(); ++j) {
          const Index y = nbs[j].vertex;
          if (g.is_boundary(y)) continue;
          if (p.oriented_diffusion && orientation.delta[g.offset(b) + j] == 0) continue;
          outflow += moved[y];
        }
        out.boundary_inflow[i] += c * outflow;
      }
    }
    out.rho = apply_diffusion(g, moved, p, &orientation);
  } else {
    out.rho = moved;
    if (p.bc == BoundaryMode::Dirichlet) zero_boundary(g, out.rho);
  }
  return out;
}

}  // namespace hughes
