#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hughes/coupler.hpp"
#include "hughes/network.hpp"

namespace hughes {

/// Shortest decimal string that parses back to the same double; '.' decimal
/// separator regardless of locale.
std::string format_double(double value);

/// Per-vertex state with enough geometry to render it on its own.
struct Snapshot {
  Index step = 0;
  double t = 0.0;
  DensityField rho;
  PotentialField u;
  Coordinates coords;
  std::vector<Index> boundary;
  std::vector<std::pair<Index, Index>> edges;
};

Snapshot make_snapshot(const WeightedGraph& g, const Coordinates& coords, const SimState& s);

std::string snapshot_to_json(const Snapshot& snap);
Snapshot snapshot_from_json(std::string_view text);
void write_snapshot(const std::filesystem::path& path, const Snapshot& snap);
Snapshot read_snapshot(const std::filesystem::path& path);

/// Columns: step,t,total_mass,interior_mass,exit_mass,max_density,l1_increment,eikonal_iters
void write_diagnostics_csv(std::ostream& out, const Trajectory& traj);

/// Columns: step followed by one column per exit label; row n holds the mass
/// that entered each exit between steps n - 1 and n.
void write_exit_flux_csv(std::ostream& out, const Trajectory& traj,
                         const std::vector<std::string>& exit_labels);

struct SummaryInfo {
  std::string scenario_name;
  std::string config_echo;
  std::vector<std::string> exit_labels;
};

std::string summary_json(const Trajectory& traj, const SummaryInfo& info);

/// Machine-readable failure record: {"error": kind, "message": ..., "context": ...}.
std::string error_record_json(const std::string& kind, const std::string& message,
                              const std::string& context);

}  // namespace hughes
