#include "hughes/network.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace hughes {

DiscreteNetwork discretize(const NetworkSpec& spec) {
  if (!(spec.dx > 0.0)) throw Error(ErrorKind::ScenarioInvalid, "dx must be positive");
  if (spec.targets.empty()) throw Error(ErrorKind::EmptyBoundary, "network has no target nodes");

  std::map<std::string, Index> node_vertex;
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    if (!node_vertex.emplace(spec.nodes[i].id, static_cast<Index>(i)).second) {
      throw Error(ErrorKind::ScenarioInvalid, "duplicate network node '" + spec.nodes[i].id + "'");
    }
  }
  auto lookup = [&](const std::string& id) {
    const auto it = node_vertex.find(id);
    if (it == node_vertex.end()) {
      throw Error(ErrorKind::ScenarioInvalid, "unknown network node '" + id + "'");
    }
    return it->second;
  };

  struct Segmented {
    Index a, b, k;
    double length;
  };
  std::vector<Segmented> plan;
  std::set<std::pair<Index, Index>> seen;
  Index vertex_count = static_cast<Index>(spec.nodes.size());
  for (const NetworkEdge& e : spec.edges) {
    const Index a = lookup(e.a), b = lookup(e.b);
    if (a == b) throw Error(ErrorKind::SelfLoop, "network edge at node '" + e.a + "' is a loop");
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error(ErrorKind::DuplicateEdge, "network edge '" + e.a + "'-'" + e.b + "' repeated");
    }
    const auto& na = spec.nodes[a];
    const auto& nb = spec.nodes[b];
    const double length = e.length.value_or(std::hypot(nb.x1 - na.x1, nb.x2 - na.x2));
    if (!(length > 0.0)) {
      throw Error(ErrorKind::NonPositiveWeight, "network edge '" + e.a + "'-'" + e.b +
                                                    "' has non-positive length");
    }
    if (spec.dx > length) {
      std::ostringstream msg;
      msg << "dx = " << spec.dx << " exceeds the length " << length << " of edge '" << e.a
          << "'-'" << e.b << "'";
      throw Error(ErrorKind::DegenerateEdge, msg.str());
    }
    const auto k = static_cast<Index>(std::llround(length / spec.dx));
    if (k < 1) {
      throw Error(ErrorKind::DegenerateEdge, "edge '" + e.a + "'-'" + e.b + "' rounds to 0 segments");
    }
    plan.push_back({a, b, k, length});
    vertex_count += k - 1;
  }

  Coordinates coords(vertex_count, 2);
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    coords.row(static_cast<Index>(i)) << spec.nodes[i].x1, spec.nodes[i].x2;
  }
  std::vector<EdgeSpec> edges;
  Index next = static_cast<Index>(spec.nodes.size());
  for (const Segmented& s : plan) {
    const double w = s.length / double(s.k);
    const Eigen::RowVector2d pa = coords.row(s.a), pb = coords.row(s.b);
    Index prev = s.a;
    for (Index i = 1; i < s.k; ++i) {
      coords.row(next) = pa + (pb - pa) * (double(i) / double(s.k));
      edges.push_back({prev, next, w});
      prev = next++;
    }
    edges.push_back({prev, s.b, w});
  }

  std::vector<Index> boundary;
  for (const std::string& t : spec.targets) boundary.push_back(lookup(t));

  DiscreteNetwork out{WeightedGraph(vertex_count, edges, boundary), std::move(coords),
                      std::move(node_vertex), 0};
  out.max_degree = max_degree(out.graph);
  return out;
}

DensityField sample_density(const DensityExpr& expr, const Coordinates& coords) {
  DensityField rho(coords.rows());
  for (Index v = 0; v < coords.rows(); ++v) {
    const double value = expr(coords(v, 0), coords(v, 1));
    if (!(value >= 0.0 && value < 1.0)) {
      std::ostringstream msg;
      msg << "initial density " << value << " at vertex " << v << " (" << coords(v, 0) << ", "
          << coords(v, 1) << ") is outside [0, 1)";
      throw Error(ErrorKind::DensityOutOfRange, msg.str());
    }
    rho[v] = value;
  }
  return rho;
}

std::string_view to_string(DiffusionScaling scaling) noexcept {
  return scaling == DiffusionScaling::Physical ? "physical" : "viscosity";
}

DiffusionScaling parse_diffusion_scaling(std::string_view name) {
  if (name == "viscosity") return DiffusionScaling::Viscosity;
  if (name == "physical") return DiffusionScaling::Physical;
  throw Error(ErrorKind::ScenarioInvalid, "unknown diffusion scaling '" + std::string(name) + "'");
}

StabilityReport validate_stability(double dx, double dt, Index max_deg, double epsilon,
                                   const FluxScheme& /*scheme*/, DiffusionScaling scaling) {
  if (!(dx > 0.0) || !(dt > 0.0)) {
    throw Error(ErrorKind::ScenarioInvalid, "dx and dt must be positive");
  }
  if (max_deg < 1) throw Error(ErrorKind::ScenarioInvalid, "graph has no edges");
  // The flux interface is fixed to g = rho (1 - rho), so |m| = 1 for every scheme.
  constexpr double slack = 1e-12;
  const double deg = double(max_deg);

  StabilityReport r;
  r.lambda = dt / dx;
  r.diffusion_ratio =
      scaling == DiffusionScaling::Physical ? dt / (dx * dx) : r.lambda * kFluxSpeedBound / 2.0;
  r.cfl_number = r.lambda * deg * kFluxSpeedBound;
  r.max_dt = dx / (deg * kFluxSpeedBound);
  if (epsilon > 0.0) {
    const double diffusion_dt = scaling == DiffusionScaling::Physical
                                    ? dx * dx / (2.0 * epsilon * deg)
                                    : dx / (epsilon * deg * kFluxSpeedBound);
    r.max_dt = std::min(r.max_dt, diffusion_dt);
  }

  if (r.cfl_number > 1.0 + slack) {
    std::ostringstream msg;
    msg << "lambda * D * |m| = " << r.cfl_number << " > 1 (dx = " << dx << ", dt = " << dt
        << ", D = " << max_deg << "); largest admissible dt = " << dx / (deg * kFluxSpeedBound);
    throw Error(ErrorKind::CflViolation, msg.str());
  }
  if (epsilon < 0.0) throw Error(ErrorKind::ScenarioInvalid, "epsilon must be >= 0");
  if (epsilon > 0.0 && epsilon * r.diffusion_ratio * deg > 0.5 + slack) {
    std::ostringstream msg;
    msg << "epsilon * diffusion_ratio * D = " << epsilon * r.diffusion_ratio * deg
        << " > 1/2; largest admissible dt = " << r.max_dt;
    throw Error(ErrorKind::DiffusionCflViolation, msg.str());
  }
  r.cfl_marginal = std::abs(r.cfl_number - 1.0) <= slack;
  return r;
}

NetworkSpec stadium_network(const StadiumOptions& o) {
  if (o.rings < 1 || o.spokes < 3) {
    throw Error(ErrorKind::ScenarioInvalid, "stadium needs at least one ring and three spokes");
  }
  NetworkSpec spec;
  spec.dx = o.dx;
  auto node_id = [](Index ring, Index spoke) {
    return "r" + std::to_string(ring) + "s" + std::to_string(spoke);
  };
  auto angle = [&](Index spoke) {
    return 2.0 * std::numbers::pi * double(spoke) / double(o.spokes);
  };
  for (Index r = 0; r < o.rings; ++r) {
    const double radius = o.inner_radius + double(r) * o.ring_spacing;
    for (Index s = 0; s < o.spokes; ++s) {
      spec.nodes.push_back(
          {node_id(r, s), o.aspect * radius * std::cos(angle(s)), radius * std::sin(angle(s))});
    }
  }
  for (Index r = 0; r < o.rings; ++r) {
    for (Index s = 0; s < o.spokes; ++s) {
      spec.edges.push_back({node_id(r, s), node_id(r, (s + 1) % o.spokes), std::nullopt});
      if (r + 1 < o.rings) spec.edges.push_back({node_id(r, s), node_id(r + 1, s), std::nullopt});
    }
  }
  const double outer = o.inner_radius + double(o.rings - 1) * o.ring_spacing + o.exit_length;
  for (Index s : o.exit_spokes) {
    if (s < 0 || s >= o.spokes) throw Error(ErrorKind::ScenarioInvalid, "exit spoke out of range");
    const std::string id = "exit" + std::to_string(s);
    spec.nodes.push_back({id, o.aspect * outer * std::cos(angle(s)), outer * std::sin(angle(s))});
    spec.edges.push_back({node_id(o.rings - 1, s), id, std::nullopt});
    spec.targets.push_back(id);
  }
  return spec;
}

}  // namespace hughes
