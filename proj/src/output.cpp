#include "hughes/output.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace hughes {

using json = nlohmann::json;

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

Snapshot make_snapshot(const WeightedGraph& g, const Coordinates& coords, const SimState& s) {
  Snapshot snap;
  snap.step = s.n;
  snap.t = s.t;
  snap.rho = s.rho;
  snap.u = s.u;
  snap.coords = coords;
  snap.boundary.assign(g.boundary().begin(), g.boundary().end());
  for (const EdgeSpec& e : g.edges()) snap.edges.emplace_back(e.a, e.b);
  return snap;
}

namespace {

json to_array(const Field<double>& f) {
  return json(std::vector<double>(f.data(), f.data() + f.size()));
}

Field<double> from_array(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Field<double>>(v.data(), static_cast<Index>(v.size()));
}

}  // namespace

std::string snapshot_to_json(const Snapshot& snap) {
  json j;
  j["step"] = snap.step;
  j["t"] = snap.t;
  j["rho"] = to_array(snap.rho);
  j["u"] = to_array(snap.u);
  j["x"] = to_array(snap.coords.col(0));
  j["y"] = to_array(snap.coords.col(1));
  j["boundary"] = snap.boundary;
  j["edges"] = snap.edges;
  return j.dump();
}

Snapshot snapshot_from_json(std::string_view text) {
  try {
    const json j = json::parse(text.begin(), text.end());
    Snapshot snap;
    snap.step = j.at("step").get<Index>();
    snap.t = j.at("t").get<double>();
    snap.rho = from_array(j.at("rho"));
    snap.u = from_array(j.at("u"));
    const Field<double> x = from_array(j.at("x"));
    const Field<double> y = from_array(j.at("y"));
    if (x.size() != snap.rho.size() || y.size() != snap.rho.size() ||
        snap.u.size() != snap.rho.size()) {
      throw Error(ErrorKind::ParseError, "snapshot arrays have inconsistent lengths");
    }
    snap.coords.resize(x.size(), 2);
    snap.coords.col(0) = x;
    snap.coords.col(1) = y;
    snap.boundary = j.at("boundary").get<std::vector<Index>>();
    snap.edges = j.at("edges").get<std::vector<std::pair<Index, Index>>>();
    return snap;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed snapshot: ") + e.what());
  }
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& snap) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << snapshot_to_json(snap) << '\n';
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open snapshot " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return snapshot_from_json(buf.str());
}

void write_diagnostics_csv(std::ostream& out, const Trajectory& traj) {
  out << "step,t,total_mass,interior_mass,exit_mass,max_density,l1_increment,eikonal_iters\n";
  for (std::size_t n = 0; n < traj.total_mass.size(); ++n) {
    out << n << ',' << format_double(double(n) * traj.dt) << ','
        << format_double(traj.total_mass[n]) << ',' << format_double(traj.interior_mass[n]) << ','
        << format_double(traj.exit_mass[n]) << ',' << format_double(traj.max_density[n]) << ','
        << format_double(traj.l1_increment[n]) << ',' << traj.eikonal_iters[n] << '\n';
  }
}

void write_exit_flux_csv(std::ostream& out, const Trajectory& traj,
                         const std::vector<std::string>& exit_labels) {
  out << "step";
  for (const auto& label : exit_labels) out << ',' << label;
  out << '\n';
  for (std::size_t k = 0; k < traj.exit_inflow.size(); ++k) {
    out << k + 1;
    for (Index i = 0; i < traj.exit_inflow[k].size(); ++i) {
      out << ',' << format_double(traj.exit_inflow[k][i]);
    }
    out << '\n';
  }
}

std::string summary_json(const Trajectory& traj, const SummaryInfo& info) {
  json j;
  j["scenario"] = info.scenario_name;
  j["steps"] = traj.steps();
  j["final_time"] = double(traj.steps()) * traj.dt;
  j["stop_rule"] = std::string(to_string(traj.stop_rule));
  j["evacuation_step"] = traj.evacuation_step ? json(*traj.evacuation_step) : json(nullptr);
  j["evacuation_time"] =
      traj.evacuation_step ? json(double(*traj.evacuation_step) * traj.dt) : json(nullptr);
  j["steady_state_step"] = traj.steady_state_step ? json(*traj.steady_state_step) : json(nullptr);
  j["initial_mass"] = traj.total_mass.front();
  j["final_mass"] = traj.total_mass.back();
  double peak = 0.0;
  for (double m : traj.max_density) peak = std::max(peak, m);
  j["peak_density"] = peak;
  json exits = json::object();
  for (std::size_t i = 0; i < info.exit_labels.size(); ++i) {
    double total = 0.0;
    for (const auto& row : traj.exit_inflow) total += row[static_cast<Index>(i)];
    exits[info.exit_labels[i]] = total;
  }
  j["exit_inflow_total"] = exits;
  j["tv_bound_violations"] = traj.tv_violations;
  j["invariant_violations"] = traj.invariant_violations;
  j["cost_cap_steps"] = traj.cost_cap_steps;
  j["config"] = json::parse(info.config_echo.empty() ? "null" : info.config_echo);
  return j.dump(2);
}

std::string error_record_json(const std::string& kind, const std::string& message,
                              const std::string& context) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  j["context"] = context;
  return j.dump();
}

}  // namespace hughes
