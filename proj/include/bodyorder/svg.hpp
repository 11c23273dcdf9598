#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bodyorder/body.hpp"
#include "bodyorder/geometry.hpp"
#include "bodyorder/hull.hpp"

namespace bodyorder {

struct RenderOptions {
  bool hull = false;
  std::optional<Line> line;
  /// Extra label per member index, drawn after the id (e.g. its position in
  /// an ordering).
  std::vector<std::pair<int, std::string>> badges;
  std::vector<std::string> captions;
};

/// Renders the family to a standalone SVG string. Rendering is the one
/// place approximate coordinates are used.
inline std::string render_svg(const Family& f, const RenderOptions& opt = {}) {
  static const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                   "#b07aa1", "#76b7b2", "#edc948", "#ff9da7",
                                   "#9c755f", "#bab0ac"};
  const int kColors = 10;
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  bool first = true;
  for (const ConvexBody& b : f)
    for (const Point& p : b.vertices) {
      double x = p.x.approx(), y = p.y.approx();
      if (first) {
        minx = maxx = x;
        miny = maxy = y;
        first = false;
      } else {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
      }
    }
  double spanx = std::max(maxx - minx, 1e-9);
  double spany = std::max(maxy - miny, 1e-9);
  double span = std::max(spanx, spany);
  const double side = 680.0, margin = 50.0;
  double scale = side / span;
  double width = spanx * scale + 2 * margin;
  double height = spany * scale + 2 * margin +
                  16.0 * static_cast<double>(opt.captions.size());
  auto X = [&](double x) { return (x - minx) * scale + margin; };
  auto Y = [&](double y) { return (maxy - y) * scale + margin; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
    << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (opt.hull) {
    std::vector<Point> hull = convex_hull(detail::family_points(f));
    if (hull.size() >= 2) {
      s << "<polygon points=\"";
      for (const Point& p : hull)
        s << X(p.x.approx()) << "," << Y(p.y.approx()) << " ";
      s << "\" fill=\"none\" stroke=\"#666\" stroke-width=\"1\" "
           "stroke-dasharray=\"6 4\"/>\n";
    }
  }

  if (opt.line) {
    double a = opt.line->a.get_d();
    double b = opt.line->b.get_d();
    double c = opt.line->c.get_d();
    double n2 = a * a + b * b;
    if (n2 > 0) {
      double cx = (minx + maxx) / 2, cy = (miny + maxy) / 2;
      double t = (c - a * cx - b * cy) / n2;
      double px = cx + a * t, py = cy + b * t;
      double dx = -b, dy = a;
      double len = std::max(spanx, spany) * 1.2;
      double norm = std::sqrt(n2);
      s << "<line x1=\"" << X(px - dx / norm * len) << "\" y1=\""
        << Y(py - dy / norm * len) << "\" x2=\"" << X(px + dx / norm * len)
        << "\" y2=\"" << Y(py + dy / norm * len)
        << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
  }

  for (size_t i = 0; i < f.size(); ++i) {
    const ConvexBody& b = f[i];
    const char* color = kPalette[i % kColors];
    if (b.vertices.size() >= 3) {
      s << "<polygon points=\"";
      for (const Point& p : b.vertices)
        s << X(p.x.approx()) << "," << Y(p.y.approx()) << " ";
      s << "\" fill=\"" << color << "\" fill-opacity=\"0.45\" stroke=\""
        << color << "\" stroke-width=\"1.5\"/>\n";
    } else if (b.vertices.size() == 2) {
      s << "<line x1=\"" << X(b.vertices[0].x.approx()) << "\" y1=\""
        << Y(b.vertices[0].y.approx()) << "\" x2=\""
        << X(b.vertices[1].x.approx()) << "\" y2=\""
        << Y(b.vertices[1].y.approx()) << "\" stroke=\"" << color
        << "\" stroke-width=\"3\"/>\n";
    } else if (b.vertices.size() == 1) {
      s << "<circle cx=\"" << X(b.vertices[0].x.approx()) << "\" cy=\""
        << Y(b.vertices[0].y.approx()) << "\" r=\"4\" fill=\"" << color
        << "\"/>\n";
    }
    Point ctr = vertex_centroid(b);
    std::string label = b.id;
    for (const auto& [idx, badge] : opt.badges)
      if (idx == static_cast<int>(i)) label += " " + badge;
    s << "<text x=\"" << X(ctr.x.approx()) << "\" y=\"" << Y(ctr.y.approx())
      << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\" "
         "text-anchor=\"middle\">"
      << label << "</text>\n";
  }

  double capy = spany * scale + 2 * margin;
  for (const std::string& cap : opt.captions) {
    s << "<text x=\"" << margin << "\" y=\"" << capy
      << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#444\">" << cap
      << "</text>\n";
    capy += 16.0;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace bodyorder
