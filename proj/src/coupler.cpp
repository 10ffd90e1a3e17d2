#include "hughes/coupler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hughes {

std::string_view to_string(StopRule rule) noexcept {
  switch (rule) {
    case StopRule::Error: return "error";
    case StopRule::EndTime: return "t_end";
    case StopRule::Evacuation: return "evacuation";
    case StopRule::SteadyState: return "steady_state";
  }
  return "";
}

SimState initial_state(const WeightedGraph& g, const DensityField& rho0,
                       const EikonalOptions& eik) {
  EikonalOptions opts = eik;
  opts.warm_start.reset();
  auto solved = value_iteration(g, rho0, opts);
  return SimState{0, 0.0, rho0, std::move(solved.u), solved.iterations};
}

StepOutput step(const WeightedGraph& g, const SimState& state, const StepParams& params,
                const EikonalOptions& eik, double dt) {
  StepResult moved = advance_density(g, state.rho, state.u, params);

  EikonalOptions opts = eik;
  opts.warm_start = state.u;
  EikonalResult solved = value_iteration(g, moved.rho, opts);

  StepOutput out;
  out.state.n = state.n + 1;
  out.state.t = double(out.state.n) * dt;
  out.state.rho = std::move(moved.rho);
  out.state.u = std::move(solved.u);
  out.state.eikonal_iters = solved.iterations;
  out.boundary_inflow = std::move(moved.boundary_inflow);
  out.cost_capped = solved.cost_capped;
  return out;
}

namespace {

double boundary_mass(const WeightedGraph& g, const DensityField& rho) {
  double m = 0.0;
  for (Index b : g.boundary()) m += rho[b];
  return m;
}

class Recorder {
 public:
  Recorder(const WeightedGraph& g, const RunConfig& config, Trajectory& traj)
      : g_(g), config_(config), traj_(traj) {}

  void record(const SimState& s, const DensityField* previous, const Field<double>* inflow) {
    const double total = s.rho.sum();
    const double exits = boundary_mass(g_, s.rho);
    traj_.total_mass.push_back(total);
    traj_.interior_mass.push_back(total - exits);
    traj_.max_density.push_back(s.rho.maxCoeff());
    traj_.eikonal_iters.push_back(s.eikonal_iters);
    if (previous == nullptr) {
      traj_.l1_increment.push_back(0.0);
      traj_.exit_mass.push_back(exits);
    } else {
      traj_.l1_increment.push_back((s.rho - *previous).cwiseAbs().sum());
      traj_.exit_inflow.push_back(*inflow);
      // Under Dirichlet the exits are emptied each step, so count what they absorbed.
      traj_.exit_mass.push_back(config_.params.bc == BoundaryMode::Dirichlet
                                    ? traj_.exit_mass.back() + inflow->sum()
                                    : exits);
    }
    if (config_.snapshot_stride > 0 && s.n % config_.snapshot_stride == 0) {
      traj_.snapshots.push_back(s);
    }
  }

  void monitor(const SimState& s, double initial_total, double initial_max) {
    const Index n = s.n;
    auto flag = [&](const std::string& what) {
      std::ostringstream msg;
      msg << "step " << n << ": " << what;
      traj_.invariant_violations.push_back(msg.str());
    };

    const double tol = config_.eikonal.tolerance;
    double min_w = std::numeric_limits<double>::infinity();
    for (const EdgeSpec& e : g_.edges()) min_w = std::min(min_w, e.weight);
    const double residual_bound = std::max(1e-8, std::max(1.0, 1.0 / min_w) * tol);
    const double residual = check_hj_residual(g_, s.rho, s.u, config_.eikonal.density_floor);
    if (residual > residual_bound) flag("HJ residual " + std::to_string(residual));

    for (Index x : g_.interior()) {
      if (!(s.u[x] > 0.0)) flag("potential not positive at vertex " + std::to_string(x));
    }
    for (Index b : g_.boundary()) {
      if (s.u[b] != 0.0) flag("potential nonzero at exit " + std::to_string(b));
    }

    const double cfl = config_.params.lambda * double(max_degree(g_)) * kFluxSpeedBound;
    if (cfl < 1.0 && initial_max < 1.0 && !(s.rho.maxCoeff() < 1.0)) {
      flag("density reached 1 under a strict CFL bound");
    }
    if (config_.params.bc == BoundaryMode::NoFlux &&
        std::abs(traj_.total_mass.back() - initial_total) > 1e-9) {
      flag("mass drift " + std::to_string(traj_.total_mass.back() - initial_total));
    }
    if (config_.params.bc == BoundaryMode::Dirichlet && traj_.interior_mass.size() >= 2) {
      const auto k = traj_.interior_mass.size();
      if (traj_.interior_mass[k - 1] > traj_.interior_mass[k - 2] + 1e-12) {
        flag("interior mass increased under Dirichlet exits");
      }
    }
  }

 private:
  const WeightedGraph& g_;
  const RunConfig& config_;
  Trajectory& traj_;
};

}  // namespace

Trajectory run(const WeightedGraph& g, const DensityField& rho0, const RunConfig& config) {
  if (!(config.dt > 0.0)) throw Error(ErrorKind::ScenarioInvalid, "dt must be positive");
  if (!(config.t_end > 0.0)) throw Error(ErrorKind::ScenarioInvalid, "t_end must be positive");
  if (rho0.size() != g.vertex_count()) {
    throw Error(ErrorKind::ScenarioInvalid, "initial density size does not match the graph");
  }
  check_step_params(config.params, max_degree(g));

  Trajectory traj;
  traj.dt = config.dt;
  Recorder recorder(g, config, traj);

  const double initial_total = rho0.sum();
  const double initial_max = rho0.maxCoeff();
  const double steady_threshold =
      config.stop.steady_threshold.value_or(1e-8 * double(g.vertex_count()));
  const double evacuation_threshold =
      config.stop.evacuation_threshold.value_or(1e-6 * initial_total);
  const auto last_step = static_cast<Index>(std::ceil(config.t_end / config.dt - 1e-9));

  SimState state = initial_state(g, rho0, config.eikonal);
  recorder.record(state, nullptr, nullptr);
  if (config.monitor_invariants) recorder.monitor(state, initial_total, initial_max);

  auto interior_mass = [&] { return traj.interior_mass.back(); };
  if (interior_mass() <= evacuation_threshold) traj.evacuation_step = 0;

  traj.stop_rule = StopRule::EndTime;
  bool snapshot_is_current = (config.snapshot_stride > 0);
  while (state.n < last_step) {
    if (config.stop.on_evacuation && traj.evacuation_step) {
      traj.stop_rule = StopRule::Evacuation;
      break;
    }
    StepOutput out = [&] {
      try {
        return step(g, state, config.params, config.eikonal, config.dt);
      } catch (const Error& e) {
        throw Error(e.kind(), "step " + std::to_string(state.n) + " -> " +
                                  std::to_string(state.n + 1) + ": " + e.detail());
      }
    }();
    if (out.cost_capped) traj.cost_cap_steps.push_back(out.state.n);
    const DensityField previous = std::move(state.rho);
    state = std::move(out.state);
    recorder.record(state, &previous, &out.boundary_inflow);
    snapshot_is_current = config.snapshot_stride > 0 && state.n % config.snapshot_stride == 0;
    if (config.monitor_invariants) recorder.monitor(state, initial_total, initial_max);

    const Index k = state.n;
    if (traj.l1_increment[k] > traj.l1_increment[1] * (1.0 + 1e-12) + 1e-15) {
      traj.tv_violations.push_back(k - 1);
    }
    if (!traj.evacuation_step && interior_mass() <= evacuation_threshold) {
      traj.evacuation_step = k;
    }
    if (!traj.steady_state_step && traj.l1_increment[k] < steady_threshold) {
      traj.steady_state_step = k - 1;
    }
    if (state.n >= last_step) break;
    if (config.stop.on_evacuation && traj.evacuation_step) {
      traj.stop_rule = StopRule::Evacuation;
      break;
    }
    if (config.stop.on_steady_state && traj.steady_state_step) {
      traj.stop_rule = StopRule::SteadyState;
      break;
    }
  }
  if (!snapshot_is_current) traj.snapshots.push_back(state);
  return traj;
}

std::optional<Index> detect_steady_state(const Trajectory& traj, double threshold) {
  if (!(threshold > 0.0)) throw Error(ErrorKind::DomainError, "threshold must be positive");
  for (std::size_t k = 1; k < traj.l1_increment.size(); ++k) {
    if (traj.l1_increment[k] < threshold) return static_cast<Index>(k) - 1;
  }
  // A trajectory that never moved (a single recorded state) is steady from the start.
  if (traj.l1_increment.size() <= 1) return Index{0};
  return std::nullopt;
}

}  // namespace hughes
