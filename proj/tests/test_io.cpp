#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "hughes/output.hpp"
#include "hughes/render.hpp"
#include "hughes/scenario.hpp"

using namespace hughes;

namespace {

const char* kStar = R"json({
  "name": "star",
  "dx": 0.1,
  "dt": 0.02,
  "t_end": 1.0,
  "network": {
    "nodes": [{"id": "J", "x": 0, "y": 0}, {"id": "A", "x": -1, "y": 0},
              {"id": "B", "x": 1, "y": 0}],
    "edges": [{"from": "A", "to": "J"}, {"from": "J", "to": "B"}],
    "targets": ["B"]
  },
  "initial_density": {"expression": "max(0, 0.5 - x^2)"},
  "boundary_condition": "dirichlet"
})json";

ErrorKind parse_kind(const std::string& text) {
  try {
    build_problem(parse_scenario(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("scenario accepted: " << text);
  return ErrorKind::IoError;
}

std::string with(const std::string& from, const std::string& to) {
  std::string s = kStar;
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

Snapshot sample_snapshot() {
  Snapshot s;
  s.step = 3;
  s.t = 0.1 + 0.2;
  s.rho.resize(3);
  s.rho << 0.0, 1.0 / 3.0, 1.0;
  s.u.resize(3);
  s.u << 0.0, 1.25, 2.0 / 7.0;
  s.coords.resize(3, 2);
  s.coords << 0.0, 0.0, 1.0, 0.5, 2.0, -0.5;
  s.boundary = {0};
  s.edges = {{0, 1}, {1, 2}};
  return s;
}

}  // namespace

TEST_CASE("scenario parsing") {
  const ScenarioConfig c = parse_scenario(kStar);
  CHECK(c.name == "star");
  CHECK(c.bc == BoundaryMode::Dirichlet);
  CHECK(c.scheme.kind == FluxScheme::Kind::EngquistOsher);
  CHECK(c.snapshot_stride == 50);
  const Problem p = build_problem(c);
  CHECK(p.graph.vertex_count() == 21);
  CHECK(p.exit_labels == std::vector<std::string>{"B"});
  CHECK(p.rho0[p.graph.boundary()[0]] == 0.0);
  CHECK(p.rho0.maxCoeff() == doctest::Approx(0.5));
  CHECK(p.stability.lambda == doctest::Approx(0.2));
}

TEST_CASE("scenario errors carry kinds and locations") {
  CHECK(parse_kind(with("\"dt\": 0.02", "\"dt\": 0.2")) == ErrorKind::CflViolation);
  CHECK(parse_kind(with("\"t_end\": 1.0", "\"t_end\": 1.0, \"colour\": 1")) ==
        ErrorKind::ScenarioInvalid);
  CHECK(parse_kind(with("dirichlet", "open")) == ErrorKind::ScenarioInvalid);
  CHECK(parse_kind(with("max(0, 0.5 - x^2)", "1.5")) == ErrorKind::DensityOutOfRange);
  CHECK(parse_kind(with("max(0, 0.5 - x^2)", "max(0")) == ErrorKind::ParseError);
  CHECK(parse_kind(with("\"targets\": [\"B\"]", "\"targets\": []")) == ErrorKind::EmptyBoundary);

  try {
    parse_scenario("{\n  \"dx\": 0.1,\n  \"dt\": ,\n}", "bad.json");
    FAIL("malformed JSON accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("bad.json:3:") != std::string::npos);
  }
  try {
    parse_scenario(with("\"dt\": 0.02", "\"dt\": \"fast\""), "s.json");
    FAIL("wrong type accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/dt") != std::string::npos);
  }
}

TEST_CASE("explicit graph scenarios") {
  const char* text = R"({
    "dx": 1, "dt": 0.25, "t_end": 1,
    "graph": {"vertices": 3, "edges": [[0, 1, 1.0], [1, 2, 1.0]], "boundary": [0]},
    "initial_density": {"values": [0, 0.2, 0.4]},
    "boundary_condition": "no-flux",
    "scheme": "godunov"
  })";
  const Problem p = build_problem(parse_scenario(text));
  CHECK(p.graph.vertex_count() == 3);
  CHECK(p.rho0[2] == 0.4);
  CHECK(p.exit_labels == std::vector<std::string>{"v0"});
  CHECK(p.coords.rows() == 3);

  std::string wrong = text;
  wrong.replace(wrong.find("[0, 0.2, 0.4]"), 13, "[0, 0.2]");
  CHECK(parse_kind(wrong) == ErrorKind::ScenarioInvalid);
}

TEST_CASE("snapshots round-trip exactly") {
  const Snapshot s = sample_snapshot();
  const Snapshot back = snapshot_from_json(snapshot_to_json(s));
  CHECK(back.step == s.step);
  CHECK(back.t == s.t);
  CHECK(back.rho == s.rho);
  CHECK(back.u == s.u);
  CHECK(back.coords == s.coords);
  CHECK(back.boundary == s.boundary);
  CHECK(back.edges == s.edges);

  const auto path = std::filesystem::temp_directory_path() / "hughes_snapshot_test.json";
  write_snapshot(path, s);
  CHECK(read_snapshot(path).rho == s.rho);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(snapshot_from_json("{\"step\": 1}"), Error);
  CHECK_THROWS_AS(read_snapshot("/nonexistent/snapshot.json"), Error);
}

TEST_CASE("shortest round-trip number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.0) == "0");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("diagnostics csv and summary") {
  const ScenarioConfig c = parse_scenario(kStar);
  const Problem p = build_problem(c);
  const Trajectory traj = run(p.graph, p.rho0, p.run);
  std::ostringstream csv;
  write_diagnostics_csv(csv, traj);
  const std::string text = csv.str();
  CHECK(text.rfind("step,t,total_mass,interior_mass,exit_mass,max_density,l1_increment,"
                   "eikonal_iters\n",
                   0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == traj.steps() + 2);

  std::ostringstream flux;
  write_exit_flux_csv(flux, traj, p.exit_labels);
  CHECK(flux.str().rfind("step,B\n", 0) == 0);

  const std::string summary = summary_json(traj, {c.name, c.echo, p.exit_labels});
  CHECK(summary.find("\"stop_rule\"") != std::string::npos);
  CHECK(summary.find("\"scenario\": \"star\"") != std::string::npos);

  const std::string err = error_record_json("CflViolation", "too big", "x.json");
  CHECK(err == R"({"context":"x.json","error":"CflViolation","message":"too big"})");
}

TEST_CASE("color ramps") {
  CHECK(density_color(0.0) == Rgb{255, 255, 204});
  CHECK(density_color(1.0) == Rgb{128, 0, 38});
  CHECK(density_color(-3.0) == density_color(0.0));
  CHECK(potential_color(0.0, 0.0) == potential_color(0.0, 5.0));
}

TEST_CASE("frames") {
  Snapshot s = sample_snapshot();
  s.rho << 0.0, 0.0, 0.0;
  const std::string empty = render_frame(s);
  CHECK(empty.find("fill=\"#ffffcc\"") != std::string::npos);
  CHECK(empty.find("fill=\"#800026\"") == std::string::npos);

  s.rho[2] = 1.0;
  const std::string one = render_frame(s);
  CHECK(one.find("fill=\"#800026\"/>") != std::string::npos);
  CHECK(one == render_frame(s));
  CHECK(std::count(one.begin(), one.end(), '\n') > 10);
  CHECK(one.find("<line") != std::string::npos);
  CHECK(one.find("class=\"exit\"") != std::string::npos);

  RenderStyle both;
  both.panel = FramePanel::Both;
  const std::string two = render_frame(s, both);
  CHECK(two.find("potential") != std::string::npos);
  CHECK(parse_frame_panel("potential") == FramePanel::Potential);
  CHECK_THROWS_AS(parse_frame_panel("velocity"), Error);
}
