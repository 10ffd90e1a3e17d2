#include "hughes/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <set>
#include <sstream>

namespace hughes {

FramePanel parse_frame_panel(std::string_view name) {
  if (name == "density") return FramePanel::Density;
  if (name == "potential") return FramePanel::Potential;
  if (name == "both") return FramePanel::Both;
  throw Error(ErrorKind::ScenarioInvalid, "unknown frame panel '" + std::string(name) + "'");
}

namespace {

template <std::size_t N>
Rgb interpolate(const std::array<Rgb, N>& stops, double s) {
  s = std::clamp(s, 0.0, 1.0);
  const double pos = s * double(N - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(pos), N - 2);
  const double f = pos - double(i);
  auto mix = [f](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * f)); };
  return {mix(stops[i].r, stops[i + 1].r), mix(stops[i].g, stops[i + 1].g),
          mix(stops[i].b, stops[i + 1].b)};
}

// Light yellow through orange to dark red.
constexpr std::array<Rgb, 5> kDensityStops{
    {{255, 255, 204}, {254, 217, 118}, {253, 141, 60}, {227, 26, 28}, {128, 0, 38}}};
// Dark blue through teal to light yellow-green.
constexpr std::array<Rgb, 5> kPotentialStops{
    {{8, 29, 88}, {34, 94, 168}, {29, 145, 192}, {127, 205, 187}, {237, 248, 177}}};

std::string hex(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

// Fixed-point formatting through to_chars keeps the output locale-independent.
std::string num(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return std::string(buf.data(), ptr);
}

struct Panel {
  FramePanel field;
  double offset_y;
};

void draw_panel(std::ostringstream& svg, const Snapshot& snap, const RenderStyle& style,
                const Panel& panel) {
  const double margin = 20.0, legend = 70.0;
  const double plot_w = style.width - 2 * margin - legend;
  const double plot_h = style.height - 2 * margin - 20.0;

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (snap.coords.rows() > 0) {
    xmin = snap.coords.col(0).minCoeff();
    xmax = snap.coords.col(0).maxCoeff();
    ymin = snap.coords.col(1).minCoeff();
    ymax = snap.coords.col(1).maxCoeff();
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = std::min(plot_w / std::max(xmax - xmin, span * 1e-3),
                                plot_h / std::max(ymax - ymin, span * 1e-3));
  auto px = [&](Index v) { return margin + (snap.coords(v, 0) - xmin) * scale; };
  auto py = [&](Index v) {
    return panel.offset_y + margin + 20.0 + (ymax - snap.coords(v, 1)) * scale;
  };

  const bool density = panel.field == FramePanel::Density;
  const double u_max = snap.u.size() > 0 ? std::max(snap.u.maxCoeff(), 0.0) : 0.0;
  auto color = [&](Index v) {
    return density ? density_color(snap.rho[v]) : potential_color(snap.u[v], u_max);
  };

  svg << "<g class=\"panel\">\n";
  svg << "<text x=\"" << num(margin) << "\" y=\"" << num(panel.offset_y + margin + 5)
      << "\" font-family=\"sans-serif\" font-size=\"13\">"
      << (density ? "density" : "potential") << "  step " << snap.step << "  t = " << num(snap.t)
      << "</text>\n";
  svg << "<g stroke=\"#9e9e9e\" stroke-width=\"1\">\n";
  for (const auto& [a, b] : snap.edges) {
    svg << "<line x1=\"" << num(px(a)) << "\" y1=\"" << num(py(a)) << "\" x2=\"" << num(px(b))
        << "\" y2=\"" << num(py(b)) << "\"/>\n";
  }
  svg << "</g>\n<g stroke=\"none\">\n";
  const std::set<Index> exits(snap.boundary.begin(), snap.boundary.end());
  for (Index v = 0; v < snap.rho.size(); ++v) {
    svg << "<circle cx=\"" << num(px(v)) << "\" cy=\"" << num(py(v)) << "\" r=\""
        << num(style.disc_radius) << "\" fill=\"" << hex(color(v)) << "\"/>\n";
  }
  svg << "</g>\n<g fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
  for (Index b : exits) {
    const double r = style.disc_radius * 2.4;
    svg << "<rect class=\"exit\" x=\"" << num(px(b) - r) << "\" y=\"" << num(py(b) - r)
        << "\" width=\"" << num(2 * r) << "\" height=\"" << num(2 * r) << "\"/>\n";
  }
  svg << "</g>\n";

  // Legend: a stepped color bar with end labels.
  const double lx = style.width - legend + 10, ly = panel.offset_y + margin + 20.0;
  const double lh = plot_h * 0.8;
  constexpr int bands = 20;
  for (int i = 0; i < bands; ++i) {
    const double s = 1.0 - (i + 0.5) / bands;
    const Rgb c = density ? density_color(s) : potential_color(s * u_max, u_max);
    svg << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly + lh * i / bands) << "\" width=\"14\" "
        << "height=\"" << num(lh / bands + 0.5) << "\" fill=\"" << hex(c) << "\"/>\n";
  }
  svg << "<text x=\"" << num(lx + 18) << "\" y=\"" << num(ly + 8)
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << (density ? num(1.0) : num(u_max))
      << "</text>\n";
  svg << "<text x=\"" << num(lx + 18) << "\" y=\"" << num(ly + lh)
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(0.0) << "</text>\n";
  svg << "</g>\n";
}

}  // namespace

Rgb density_color(double rho) { return interpolate(kDensityStops, rho); }

Rgb potential_color(double u, double u_max) {
  return interpolate(kPotentialStops, u_max > 0.0 ? u / u_max : 0.0);
}

std::string render_frame(const Snapshot& snap, const RenderStyle& style) {
  std::vector<Panel> panels;
  if (style.panel == FramePanel::Both) {
    panels = {{FramePanel::Density, 0.0}, {FramePanel::Potential, style.height}};
  } else {
    panels = {{style.panel, 0.0}};
  }
  const double total_h = style.height * double(panels.size());

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(style.width)
      << "\" height=\"" << num(total_h) << "\" viewBox=\"0 0 " << num(style.width) << ' '
      << num(total_h) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const Panel& p : panels) draw_panel(svg, snap, style, p);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hughes
