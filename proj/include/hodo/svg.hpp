#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "hodo/curve.hpp"
#include "hodo/map.hpp"

namespace hodo {

// Sampling request for a curve (or the grid-line family of a planar map).
struct PlotSpec {
  Rational t0;
  Rational t1;
  int samples = 200;
  int grid_lines = 10;  // per direction, for map plots
};

namespace detail {

// Decimal conversion happens only here, at the output boundary: 9 significant
// digits.
inline std::string decimal9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace detail

// One sampled polyline in the plane; gaps at skipped samples split a curve
// into several of these.
using Polyline = std::vector<std::pair<double, double>>;

// Exact rational evaluation on an equally spaced rational grid; samples where
// a denominator is exactly zero are skipped and split the output.
inline std::vector<Polyline> sample_planar(
    const std::vector<RatFunc<Rational>>& xy, const PlotSpec& spec) {
  if (spec.samples < 2) throw Error("BadInput", "sample count must be >= 2");
  if (!(spec.t0 < spec.t1)) throw Error("BadInput", "range must satisfy t0 < t1");
  std::vector<Polyline> out;
  Polyline current;
  Rational step = (spec.t1 - spec.t0) / Rational(spec.samples - 1);
  for (int k = 0; k < spec.samples; ++k) {
    Rational t = spec.t0 + step * Rational(k);
    auto x = xy[0].eval({t});
    auto y = xy[1].eval({t});
    if (!x || !y) {
      if (current.size() >= 2) out.push_back(std::move(current));
      current = {};
      continue;
    }
    current.emplace_back(x->to_double(), y->to_double());
  }
  if (current.size() >= 2) out.push_back(std::move(current));
  return out;
}

// Projects a curve to one or two planar panels: dim 1 plots (t, r1), dim 2
// plots directly, dim 3 is shown as xy and xz projections.
inline std::vector<std::vector<Polyline>> curve_panels(const PHCurve& r,
                                                       const PlotSpec& spec) {
  std::vector<std::string> vt = r.vars();
  auto t = RatFunc<Rational>::variable(vt, r.param);
  std::vector<std::vector<Polyline>> panels;
  if (r.dim() == 1) {
    panels.push_back(sample_planar({t, r.components[0]}, spec));
  } else if (r.dim() == 2) {
    panels.push_back(sample_planar({r.components[0], r.components[1]}, spec));
  } else {
    panels.push_back(sample_planar({r.components[0], r.components[1]}, spec));
    panels.push_back(sample_planar({r.components[0], r.components[2]}, spec));
  }
  return panels;
}

// Images of a grid of axis-parallel lines in the box [t0, t1]^2 under a map
// with planar source. Grid lines running through map poles are skipped.
inline std::vector<std::vector<Polyline>> map_grid_panels(const RationalMap& phi,
                                                          const PlotSpec& spec) {
  if (phi.source_dim() != 2)
    throw Error("BadInput", "grid plots need a map with planar source");
  std::vector<PHCurve> lines;
  Rational step = (spec.t1 - spec.t0) / Rational(spec.grid_lines - 1);
  for (int k = 0; k < spec.grid_lines; ++k) {
    Rational c = spec.t0 + step * Rational(k);
    lines.push_back(line_curve({c, spec.t0}, {Rational(0), Rational(1)}));
    lines.push_back(line_curve({spec.t0, c}, {Rational(1), Rational(0)}));
  }
  std::size_t panel_count = phi.target_dim() >= 3 ? 2 : 1;
  std::vector<std::vector<Polyline>> panels(panel_count);
  for (const auto& line : lines) {
    PHCurve image;
    try {
      image = compose_map_curve(phi, line);
    } catch (const PoleOnCurve&) {
      continue;  // skip-and-note
    }
    for (std::size_t p = 0; p < panel_count; ++p) {
      auto polys = sample_planar(
          {image.components[0], image.components[p + 1]}, spec);
      for (auto& poly : polys) panels[p].push_back(std::move(poly));
    }
  }
  return panels;
}

// Fixed-viewport SVG document with one group per panel.
inline std::string render_svg(const std::vector<std::vector<Polyline>>& panels) {
  const double panel_w = 540.0, panel_h = 540.0, margin = 30.0;
  bool any = false;
  for (const auto& panel : panels)
    for (const auto& poly : panel)
      if (!poly.empty()) any = true;
  if (!any) throw EmptyPlot();

  const double width = margin + panels.size() * (panel_w + margin);
  const double height = panel_h + 2 * margin;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         detail::decimal9(width) + "\" height=\"" + detail::decimal9(height) +
         "\" viewBox=\"0 0 " + detail::decimal9(width) + " " +
         detail::decimal9(height) + "\">\n";
  for (std::size_t p = 0; p < panels.size(); ++p) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& poly : panels[p]) {
      for (const auto& [x, y] : poly) {
        if (first) {
          xmin = xmax = x;
          ymin = ymax = y;
          first = false;
        } else {
          xmin = std::min(xmin, x);
          xmax = std::max(xmax, x);
          ymin = std::min(ymin, y);
          ymax = std::max(ymax, y);
        }
      }
    }
    if (first) continue;
    double spanx = xmax - xmin, spany = ymax - ymin;
    if (spanx <= 0) spanx = 1;
    if (spany <= 0) spany = 1;
    double scale = std::min(panel_w / spanx, panel_h / spany);
    double ox = margin + p * (panel_w + margin);
    auto tx = [&](double x) { return ox + (x - xmin) * scale; };
    auto ty = [&](double y) { return margin + (ymax - y) * scale; };
    svg += "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& poly : panels[p]) {
      svg += "    <polyline points=\"";
      for (std::size_t k = 0; k < poly.size(); ++k) {
        if (k) svg += " ";
        svg += detail::decimal9(tx(poly[k].first)) + "," +
               detail::decimal9(ty(poly[k].second));
      }
      svg += "\"/>\n";
    }
    svg += "  </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hodo
