#pragma once

#include <string>
#include <string_view>

#include "hughes/output.hpp"

namespace hughes {

enum class FramePanel { Density, Potential, Both };

FramePanel parse_frame_panel(std::string_view name);

struct RenderStyle {
  FramePanel panel = FramePanel::Density;
  /// Drawing size of one panel in SVG user units.
  double width = 640.0;
  double height = 480.0;
  double disc_radius = 2.5;
};

struct Rgb {
  int r, g, b;
  bool operator==(const Rgb&) const = default;
};

/// Fixed ramp for densities on [0, 1]; values are clamped.
Rgb density_color(double rho);
/// Ramp for potentials scaled by the largest potential in the snapshot.
Rgb potential_color(double u, double u_max);

/// Deterministic SVG: edges as segments, vertices as discs colored by the
/// selected field, exits outlined, with an embedded legend.
std::string render_frame(const Snapshot& snap, const RenderStyle& style = {});

}  // namespace hughes
