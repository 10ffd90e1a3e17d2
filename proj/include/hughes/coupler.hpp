#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hughes/eikonal.hpp"
#include "hughes/transport.hpp"

namespace hughes {

struct SimState {
  Index n = 0;
  double t = 0.0;
  DensityField rho;
  /// Potential solved for rho.
  PotentialField u;
  Index eikonal_iters = 0;
};

/// Solves u for the initial density (shortest-path start, no warm start).
SimState initial_state(const WeightedGraph& g, const DensityField& rho0,
                       const EikonalOptions& eik);

struct StepOutput {
  SimState state;
  Field<double> boundary_inflow;
  bool cost_capped = false;
};

/// Advances (rho^n, u^n) to (rho^{n+1}, u^{n+1}); u^{n+1} is warm-started
/// from u^n.
StepOutput step(const WeightedGraph& g, const SimState& state, const StepParams& params,
                const EikonalOptions& eik, double dt);

enum class StopRule { Error, EndTime, Evacuation, SteadyState };
std::string_view to_string(StopRule rule) noexcept;

struct StopRules {
  bool on_evacuation = true;
  bool on_steady_state = true;
  /// Defaults: 1e-8 |V| and 1e-6 * initial mass.
  std::optional<double> steady_threshold;
  std::optional<double> evacuation_threshold;
};

struct RunConfig {
  StepParams params;
  EikonalOptions eikonal;
  double dt = 0.0;
  double t_end = 0.0;
  Index snapshot_stride = 50;
  StopRules stop;
  /// Per-step invariant checks recorded into Trajectory::invariant_violations.
  bool monitor_invariants = true;
};

struct Trajectory {
  double dt = 0.0;
  std::vector<SimState> snapshots;

  // One entry per recorded step n = 0..steps().
  std::vector<double> total_mass;
  std::vector<double> interior_mass;
  std::vector<double> exit_mass;
  std::vector<double> max_density;
  /// Entry n is sum_x |rho^n(x) - rho^{n-1}(x)|; entry 0 is 0.
  std::vector<double> l1_increment;
  std::vector<Index> eikonal_iters;
  /// Row n - 1 holds the mass that entered each boundary vertex in step n - 1 -> n.
  std::vector<Field<double>> exit_inflow;

  std::optional<Index> evacuation_step;
  std::optional<Index> steady_state_step;
  StopRule stop_rule = StopRule::EndTime;

  /// Steps n at which sum|rho^{n+1} - rho^n| exceeded sum|rho^1 - rho^0|.
  std::vector<Index> tv_violations;
  std::vector<std::string> invariant_violations;
  std::vector<Index> cost_cap_steps;

  Index steps() const { return static_cast<Index>(total_mass.size()) - 1; }
  const SimState& final_state() const { return snapshots.back(); }
};

Trajectory run(const WeightedGraph& g, const DensityField& rho0, const RunConfig& config);

/// First n with sum_x |rho^{n+1}(x) - rho^n(x)| < threshold.
std::optional<Index> detect_steady_state(const Trajectory& traj, double threshold);

}  // namespace hughes
