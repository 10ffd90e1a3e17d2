// Command-line front end: run, validate and render scenarios.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hughes/output.hpp"
#include "hughes/render.hpp"
#include "hughes/scenario.hpp"

namespace fs = std::filesystem;
using namespace hughes;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ScenarioInvalid:
    case ErrorKind::IoError: return 2;
    default: return 1;
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << text;
}

struct RunArgs {
  std::string scenario;
  std::optional<std::string> out_dir;
  bool frames = false;
  std::optional<Index> stride;
  bool quiet = false;
};

int run_command(const RunArgs& args) {
  ScenarioConfig config = load_scenario(args.scenario);
  if (args.out_dir) config.output_dir = *args.out_dir;
  if (args.stride) {
    if (*args.stride < 1) throw Error(ErrorKind::ScenarioInvalid, "--stride must be >= 1");
    config.snapshot_stride = *args.stride;
  }
  config.frames = config.frames || args.frames;

  const fs::path out = config.output_dir;
  fs::create_directories(out / "snapshots");
  if (config.frames) fs::create_directories(out / "frames");
  std::error_code ignored;
  fs::remove(out / "error.json", ignored);

  try {
    const Problem problem = build_problem(config);
    if (!args.quiet) {
      std::cerr << config.name << ": " << problem.graph.vertex_count() << " vertices, D = "
                << max_degree(problem.graph) << ", lambda D |m| = "
                << format_double(problem.stability.cfl_number) << '\n';
      if (problem.stability.cfl_marginal) {
        std::cerr << "warning: CFL holds with equality; strict density bounds are not guaranteed\n";
      }
    }
    const Trajectory traj = run(problem.graph, problem.rho0, problem.run);

    {
      std::ofstream csv(out / "diagnostics.csv", std::ios::binary);
      write_diagnostics_csv(csv, traj);
    }
    {
      std::ofstream csv(out / "exit_flux.csv", std::ios::binary);
      write_exit_flux_csv(csv, traj, problem.exit_labels);
    }
    for (const SimState& s : traj.snapshots) {
      const Snapshot snap = make_snapshot(problem.graph, problem.coords, s);
      const std::string stem = "step_" + std::to_string(s.n);
      write_snapshot(out / "snapshots" / (stem + ".json"), snap);
      if (config.frames) {
        RenderStyle style;
        style.panel = FramePanel::Both;
        write_text(out / "frames" / (stem + ".svg"), render_frame(snap, style));
      }
    }
    write_text(out / "summary.json",
               summary_json(traj, {config.name, config.echo, problem.exit_labels}) + "\n");

    if (!args.quiet) {
      if (!traj.cost_cap_steps.empty()) {
        std::cerr << "warning: density cost cap was active at " << traj.cost_cap_steps.size()
                  << " step(s)\n";
      }
      if (!traj.tv_violations.empty()) {
        std::cerr << "note: time-increment bound exceeded at " << traj.tv_violations.size()
                  << " step(s), first at step " << traj.tv_violations.front() << '\n';
      }
      for (const auto& v : traj.invariant_violations) std::cerr << "invariant: " << v << '\n';
      std::cerr << "finished after " << traj.steps() << " steps (" << to_string(traj.stop_rule)
                << "), outputs in " << out.string() << '\n';
    }
    return 0;
  } catch (const Error& e) {
    write_text(out / "error.json",
               error_record_json(std::string(to_string(e.kind())), e.detail(), args.scenario) +
                   "\n");
    throw;
  }
}

int validate_command(const std::string& scenario) {
  const ScenarioConfig config = load_scenario(scenario);
  const Problem problem = build_problem(config);
  std::cout << "ok: " << config.name << ", " << problem.graph.vertex_count() << " vertices, "
            << problem.graph.edge_count() << " edges, D = " << max_degree(problem.graph)
            << ", lambda = " << format_double(problem.stability.lambda)
            << ", lambda D |m| = " << format_double(problem.stability.cfl_number)
            << ", max dt = " << format_double(problem.stability.max_dt) << '\n';
  return 0;
}

int render_command(const std::string& snapshot, const std::string& out, const std::string& panel) {
  RenderStyle style;
  style.panel = parse_frame_panel(panel);
  write_text(out, render_frame(read_snapshot(snapshot), style));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Hughes pedestrian-flow simulator on graphs"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario and write diagnostics");
  run_cmd->add_option("scenario", run_args.scenario, "Scenario file")->required();
  run_cmd->add_option("--out", run_args.out_dir, "Output directory");
  run_cmd->add_flag("--frames", run_args.frames, "Write SVG frames for each snapshot");
  run_cmd->add_option("--stride", run_args.stride, "Snapshot stride in steps");
  run_cmd->add_flag("--quiet", run_args.quiet, "Suppress progress output");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Parse a scenario and check stability");
  validate_cmd->add_option("scenario", validate_path, "Scenario file")->required();

  std::string snapshot_path, svg_path, panel = "density";
  auto* render_cmd = app.add_subcommand("render", "Render a snapshot to SVG");
  render_cmd->add_option("snapshot", snapshot_path, "Snapshot JSON file")->required();
  render_cmd->add_option("--out", svg_path, "Output SVG file")->required();
  render_cmd->add_option("--panel", panel, "density | potential | both");

  CLI11_PARSE(app, argc, argv);

  const std::string context = run_cmd->parsed()        ? run_args.scenario
                              : validate_cmd->parsed() ? validate_path
                                                       : snapshot_path;
  try {
    if (run_cmd->parsed()) return run_command(run_args);
    if (validate_cmd->parsed()) return validate_command(validate_path);
    return render_command(snapshot_path, svg_path, panel);
  } catch (const Error& e) {
    std::cerr << error_record_json(std::string(to_string(e.kind())), e.detail(), context) << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << error_record_json("IoError", e.what(), context) << '\n';
    return 2;
  }
}
