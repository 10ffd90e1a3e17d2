#include "hughes/scenario.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <tuple>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hughes {

namespace {

using json = nlohmann::json;

// Typed access to a JSON object that rejects unknown keys, so a misspelt
// setting fails loudly instead of silently falling back to a default.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("", "expected an object");
  }

  /// Rejects keys that were never queried.
  void done() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) fail(key, "unknown key");
    }
  }

  bool has(const std::string& key) {
    used_.insert(key);
    return j_.contains(key);
  }

  template <typename T>
  T get(const std::string& key) {
    if (!has(key)) fail(key, "missing required key");
    return as<T>(key);
  }

  template <typename T>
  T get_or(const std::string& key, T fallback) {
    return has(key) ? as<T>(key) : fallback;
  }

  const json& raw(const std::string& key) {
    if (!has(key)) fail(key, "missing required key");
    return j_.at(key);
  }

  std::string child(const std::string& key) const { return path_ + "/" + key; }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw Error(ErrorKind::ScenarioInvalid, (key.empty() ? path_ : child(key)) + ": " + what);
  }

 private:
  template <typename T>
  T as(const std::string& key) {
    try {
      return j_.at(key).get<T>();
    } catch (const json::exception&) {
      fail(key, "wrong type");
    }
  }

  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

NetworkSpec parse_network(const json& j, const std::string& path, double dx) {
  Section s(j, path);
  if (s.has("generator")) {
    const auto kind = s.get<std::string>("generator");
    if (kind != "stadium") s.fail("generator", "unknown generator '" + kind + "'");
    StadiumOptions o;
    o.rings = s.get_or<Index>("rings", o.rings);
    o.spokes = s.get_or<Index>("spokes", o.spokes);
    o.inner_radius = s.get_or<double>("inner_radius", o.inner_radius);
    o.ring_spacing = s.get_or<double>("ring_spacing", o.ring_spacing);
    o.aspect = s.get_or<double>("aspect", o.aspect);
    o.exit_length = s.get_or<double>("exit_length", o.exit_length);
    o.exit_spokes = s.get_or<std::vector<Index>>("exit_spokes", o.exit_spokes);
    o.dx = dx;
    s.done();
    return stadium_network(o);
  }

  NetworkSpec spec;
  spec.dx = dx;
  const json& nodes = s.raw("nodes");
  if (!nodes.is_array()) s.fail("nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Section n(nodes[i], s.child("nodes") + "/" + std::to_string(i));
    spec.nodes.push_back({n.get<std::string>("id"), n.get<double>("x"), n.get<double>("y")});
    n.done();
  }
  const json& edges = s.raw("edges");
  if (!edges.is_array()) s.fail("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Section e(edges[i], s.child("edges") + "/" + std::to_string(i));
    NetworkEdge edge{e.get<std::string>("from"), e.get<std::string>("to"), std::nullopt};
    if (e.has("length")) edge.length = e.get<double>("length");
    e.done();
    spec.edges.push_back(std::move(edge));
  }
  spec.targets = s.get<std::vector<std::string>>("targets");
  s.done();
  return spec;
}

ExplicitGraphSpec parse_graph(const json& j, const std::string& path) {
  Section s(j, path);
  ExplicitGraphSpec spec;
  spec.vertices = s.get<Index>("vertices");
  const auto edges = s.get<std::vector<std::tuple<Index, Index, double>>>("edges");
  for (const auto& [a, b, w] : edges) spec.edges.push_back({a, b, w});
  spec.boundary = s.get<std::vector<Index>>("boundary");
  if (s.has("coordinates")) {
    const auto pts = s.get<std::vector<std::array<double, 2>>>("coordinates");
    if (static_cast<Index>(pts.size()) != spec.vertices) {
      s.fail("coordinates", "needs one [x, y] pair per vertex");
    }
    Coordinates c(spec.vertices, 2);
    for (Index v = 0; v < spec.vertices; ++v) c.row(v) << pts[v][0], pts[v][1];
    spec.coordinates = std::move(c);
  }
  s.done();
  return spec;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << origin << ":" << line << ":" << column << ": malformed scenario document";
    throw Error(ErrorKind::ParseError, msg.str());
  }

  ScenarioConfig c;
  c.echo = doc.dump();
  try {
    Section s(doc, "");
    c.name = s.get_or<std::string>("name", "scenario");
    c.dx = s.get<double>("dx");
    c.dt = s.get<double>("dt");
    c.t_end = s.get<double>("t_end");
    if (!(c.t_end > 0.0)) s.fail("t_end", "must be positive");

    const bool has_network = s.has("network");
    const bool has_graph = s.has("graph");
    if (has_network == has_graph) s.fail("", "exactly one of 'network' or 'graph' is required");
    if (has_network) c.network = parse_network(s.raw("network"), "/network", c.dx);
    if (has_graph) c.graph = parse_graph(s.raw("graph"), "/graph");

    {
      Section d(s.raw("initial_density"), "/initial_density");
      const bool expr = d.has("expression");
      const bool values = d.has("values");
      if (expr == values) d.fail("", "give exactly one of 'expression' or 'values'");
      if (expr) c.density_expression = DensityExpr::parse(d.get<std::string>("expression"));
      if (values) c.density_values = d.get<std::vector<double>>("values");
      d.done();
    }

    const double lf_lambda = s.get_or<double>("lax_friedrichs_lambda", 2.0);
    c.scheme = parse_flux_scheme(s.get_or<std::string>("scheme", "engquist-osher"), lf_lambda);
    c.bc = parse_boundary_mode(s.get<std::string>("boundary_condition"));

    if (s.has("diffusion")) {
      Section d(s.raw("diffusion"), "/diffusion");
      c.epsilon = d.get<double>("epsilon");
      c.diffusion_scaling = parse_diffusion_scaling(d.get_or<std::string>("scaling", "viscosity"));
      c.oriented_diffusion = d.get_or<bool>("oriented", false);
      d.done();
    }
    if (s.has("eikonal")) {
      Section e(s.raw("eikonal"), "/eikonal");
      c.eikonal.tolerance = e.get_or<double>("tolerance", c.eikonal.tolerance);
      c.eikonal.max_iterations = e.get_or<Index>("max_iterations", c.eikonal.max_iterations);
      c.eikonal.density_floor = e.get_or<double>("density_floor", c.eikonal.density_floor);
      c.eikonal.validate();
      e.done();
    }
    if (s.has("stop")) {
      Section st(s.raw("stop"), "/stop");
      c.stop.on_evacuation = st.get_or<bool>("evacuation", true);
      c.stop.on_steady_state = st.get_or<bool>("steady_state", true);
      if (st.has("steady_threshold")) c.stop.steady_threshold = st.get<double>("steady_threshold");
      if (st.has("evacuation_threshold")) {
        c.stop.evacuation_threshold = st.get<double>("evacuation_threshold");
      }
      st.done();
    }
    if (s.has("output")) {
      Section o(s.raw("output"), "/output");
      c.output_dir = o.get_or<std::string>("directory", c.output_dir.string());
      c.snapshot_stride = o.get_or<Index>("stride", c.snapshot_stride);
      c.frames = o.get_or<bool>("frames", false);
      if (c.snapshot_stride < 1) o.fail("stride", "must be >= 1");
      o.done();
    }
    c.monitor_invariants = s.get_or<bool>("monitor_invariants", true);
    s.done();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ScenarioInvalid || e.kind() == ErrorKind::ParseError) {
      throw Error(e.kind(), std::string(origin) + ": " + e.detail());
    }
    throw Error(ErrorKind::ScenarioInvalid, std::string(origin) + ": " + e.what());
  }
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

namespace {

struct BuiltGraph {
  WeightedGraph graph;
  Coordinates coords;
  std::vector<std::string> exit_labels;
};

BuiltGraph build_graph_section(const ScenarioConfig& c) {
  if (c.network) {
    DiscreteNetwork net = discretize(*c.network);
    std::vector<std::string> labels;
    for (Index b : net.graph.boundary()) {
      std::string label = "v" + std::to_string(b);
      for (const auto& [id, v] : net.node_vertex) {
        if (v == b) label = id;
      }
      labels.push_back(std::move(label));
    }
    return {std::move(net.graph), std::move(net.coords), std::move(labels)};
  }
  const ExplicitGraphSpec& spec = *c.graph;
  WeightedGraph g = build_graph(spec.vertices, spec.edges, spec.boundary);
  Coordinates coords;
  if (spec.coordinates) {
    coords = *spec.coordinates;
  } else {
    // Without positions, lay vertices out on a circle so frames still render.
    coords.resize(spec.vertices, 2);
    for (Index v = 0; v < spec.vertices; ++v) {
      const double a = 2.0 * 3.141592653589793 * double(v) / double(spec.vertices);
      coords.row(v) << std::cos(a), std::sin(a);
    }
  }
  std::vector<std::string> labels;
  for (Index b : g.boundary()) labels.push_back("v" + std::to_string(b));
  return {std::move(g), std::move(coords), std::move(labels)};
}

}  // namespace

Problem build_problem(const ScenarioConfig& c) {
  BuiltGraph built = build_graph_section(c);
  const WeightedGraph& g = built.graph;

  DensityField rho0;
  if (c.density_expression) {
    rho0 = sample_density(*c.density_expression, built.coords);
  } else {
    const auto& values = *c.density_values;
    if (static_cast<Index>(values.size()) != g.vertex_count()) {
      throw Error(ErrorKind::ScenarioInvalid, "initial_density.values has " +
                                                  std::to_string(values.size()) + " entries for " +
                                                  std::to_string(g.vertex_count()) + " vertices");
    }
    rho0 = Eigen::Map<const DensityField>(values.data(), g.vertex_count());
    for (Index v = 0; v < rho0.size(); ++v) {
      if (!(rho0[v] >= 0.0 && rho0[v] < 1.0)) {
        throw Error(ErrorKind::DensityOutOfRange,
                    "initial density " + std::to_string(rho0[v]) + " at vertex " +
                        std::to_string(v) + " is outside [0, 1)");
      }
    }
  }

  const StabilityReport stability =
      validate_stability(c.dx, c.dt, max_degree(g), c.epsilon, c.scheme, c.diffusion_scaling);

  RunConfig run;
  run.params.lambda = stability.lambda;
  run.params.scheme = c.scheme;
  run.params.bc = c.bc;
  run.params.epsilon = c.epsilon;
  run.params.diffusion_ratio = stability.diffusion_ratio;
  run.params.oriented_diffusion = c.oriented_diffusion;
  run.eikonal = c.eikonal;
  run.dt = c.dt;
  run.t_end = c.t_end;
  run.snapshot_stride = c.snapshot_stride;
  run.stop = c.stop;
  run.monitor_invariants = c.monitor_invariants;

  return Problem{std::move(built.graph), std::move(built.coords), std::move(built.exit_labels),
                 std::move(rho0), std::move(run), stability};
}

Trajectory run(const ScenarioConfig& config) {
  const Problem p = build_problem(config);
  return run(p.graph, p.rho0, p.run);
}

}  // namespace hughes
