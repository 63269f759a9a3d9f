#include "sqlem/figure.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "sqlem/curves.hpp"

namespace sqlem {

namespace {

constexpr double kViewHalf = 1.3;  // world viewport is [-1.3, 1.3]^2, y up

struct Mapper {
  int w;
  int h;

  double px(double x) const {
    return (x + kViewHalf) / (2.0 * kViewHalf) * static_cast<double>(w);
  }
  double py(double y) const {
    return (kViewHalf - y) / (2.0 * kViewHalf) * static_cast<double>(h);
  }
};

void append_fmt(std::string& out, const char* fmt, double a, double b) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  out += buf;
}

std::string points_attr(const std::vector<CartesianPoint>& pts,
                        const Mapper& map) {
  std::string out;
  out.reserve(pts.size() * 26);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    append_fmt(out, "%.10f,%.10f", map.px(pts[i].x), map.py(pts[i].y));
  }
  return out;
}

void append_polyline(std::string& svg, const char* id,
                     const std::vector<CartesianPoint>& pts, const Mapper& map,
                     const char* style) {
  svg += "  <polyline id=\"";
  svg += id;
  svg += "\" ";
  svg += style;
  svg += " points=\"";
  svg += points_attr(pts, map);
  svg += "\"/>\n";
}

void append_marker(std::string& svg, const Mapper& map, CartesianPoint p,
                   const char* label, double dx_px, double dy_px) {
  std::string circle;
  append_fmt(circle, "  <circle cx=\"%.10f\" cy=\"%.10f\"", map.px(p.x),
             map.py(p.y));
  svg += circle;
  svg += " r=\"4\" fill=\"#111111\"/>\n";
  std::string text;
  append_fmt(text, "  <text x=\"%.10f\" y=\"%.10f\"", map.px(p.x) + dx_px,
             map.py(p.y) + dy_px);
  svg += text;
  svg += " font-family=\"sans-serif\" font-size=\"16\" fill=\"#111111\">";
  svg += label;
  svg += "</text>\n";
}

/// First-quadrant squircle arc from polar angle 0 up to alpha <= pi/4,
/// n_seg segments, via the radial projection map.
std::vector<CartesianPoint> squircle_wedge_arc(double alpha, int n_seg) {
  std::vector<CartesianPoint> pts;
  pts.reserve(static_cast<std::size_t>(n_seg) + 1);
  for (int j = 0; j <= n_seg; ++j) {
    const double phi =
        alpha * (static_cast<double>(j) / static_cast<double>(n_seg));
    pts.push_back(radial_projection_to_squircle(phi));
  }
  return pts;
}

}  // namespace

std::string render_figure_svg(const FigureSpec& spec, ToleranceConfig tol) {
  (void)tol;  // rendering uses only closed forms; kept for interface parity
  if (!(spec.alpha >= 0.0) || !(spec.alpha <= quarter_pi)) {
    throw DomainError("render_figure_svg: alpha outside [0, pi/4]");
  }
  if (spec.width_px < 100 || spec.height_px < 100) {
    throw DomainError("render_figure_svg: dimensions must be at least 100 px");
  }
  const Mapper map{spec.width_px, spec.height_px};
  const double alpha = spec.alpha;
  const double beta = beta_of_alpha(alpha);
  const double r_B = lemniscate_r(alpha);
  const double r_C = r_B * r_B;
  const double r_D = d_of_b(r_B);

  std::string svg;
  svg.reserve(1 << 16);
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  spec.width_px, spec.height_px, spec.width_px,
                  spec.height_px);
    svg += buf;
  }
  svg +=
      "  <!-- Sector shading is replicated through the eight-fold symmetry "
      "of the construction; the fundamental wedge spans polar angles 0 to "
      "alpha. -->\n";

  // Light coordinate axes.
  {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"0\" y1=\"%.10f\" x2=\"%d\" y2=\"%.10f\" "
                  "stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
                  map.py(0.0), spec.width_px, map.py(0.0));
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"%.10f\" y1=\"0\" x2=\"%.10f\" y2=\"%d\" "
                  "stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
                  map.px(0.0), map.px(0.0), spec.height_px);
    svg += buf;
  }

  // Shaded sector: wedge O -> squircle arc(0..alpha) -> O, replicated by
  // the eight symmetries of both curves.
  {
    const std::vector<CartesianPoint> arc = squircle_wedge_arc(alpha, 64);
    struct Xf {
      double sx, sy;  // signs
      bool swap;      // exchange x and y first
    };
    const Xf xfs[8] = {{+1, +1, false}, {+1, +1, true},  {-1, +1, true},
                       {-1, +1, false}, {-1, -1, false}, {-1, -1, true},
                       {+1, -1, true},  {+1, -1, false}};
    svg += "  <g id=\"sector\" fill=\"#f5c842\" fill-opacity=\"0.45\" "
           "stroke=\"none\">\n";
    for (const Xf& xf : xfs) {
      std::vector<CartesianPoint> poly;
      poly.reserve(arc.size() + 1);
      poly.push_back({0.0, 0.0});
      for (const CartesianPoint& p : arc) {
        const double x = xf.swap ? p.y : p.x;
        const double y = xf.swap ? p.x : p.y;
        poly.push_back({xf.sx * x, xf.sy * y});
      }
      svg += "    <polygon points=\"";
      svg += points_attr(poly, map);
      svg += "\"/>\n";
    }
    svg += "  </g>\n";
  }

  // Squircle: quarter-arc sampled in the (sqrt cos, sqrt sin) parameter,
  // reflected across both axes; 1024 segments total.
  {
    std::vector<CartesianPoint> quad;
    quad.reserve(257);
    for (int k = 0; k <= 256; ++k) {
      quad.push_back(squircle_point_param(
          half_pi * (static_cast<double>(k) / 256.0)));
    }
    std::vector<CartesianPoint> pts;
    pts.reserve(1025);
    for (int k = 0; k <= 256; ++k) {
      pts.push_back(quad[static_cast<std::size_t>(k)]);
    }
    for (int k = 1; k <= 256; ++k) {
      const CartesianPoint& p = quad[static_cast<std::size_t>(256 - k)];
      pts.push_back({-p.x, p.y});
    }
    for (int k = 1; k <= 256; ++k) {
      const CartesianPoint& p = quad[static_cast<std::size_t>(k)];
      pts.push_back({-p.x, -p.y});
    }
    for (int k = 1; k <= 256; ++k) {
      const CartesianPoint& p = quad[static_cast<std::size_t>(256 - k)];
      pts.push_back({p.x, -p.y});
    }
    append_polyline(svg, "squircle", pts, map,
                    "fill=\"none\" stroke=\"#1f6f8b\" stroke-width=\"2\"");
  }

  // Lemniscate lobes: radial parametrization of the upper half from the
  // vertex to the origin, then the mirrored lower half; 512 segments per
  // lobe.
  {
    std::vector<CartesianPoint> upper;
    upper.reserve(257);
    for (int j = 0; j <= 256; ++j) {
      upper.push_back(lemniscate_point_from_r(static_cast<double>(j) / 256.0));
    }
    std::vector<CartesianPoint> lobe;
    lobe.reserve(513);
    for (int j = 256; j >= 0; --j) {
      lobe.push_back(upper[static_cast<std::size_t>(j)]);
    }
    for (int j = 1; j <= 256; ++j) {
      const CartesianPoint& p = upper[static_cast<std::size_t>(j)];
      lobe.push_back({p.x, -p.y});
    }
    append_polyline(svg, "lemniscate-right", lobe, map,
                    "fill=\"none\" stroke=\"#444444\" stroke-width=\"2\"");
    std::vector<CartesianPoint> mirrored;
    mirrored.reserve(lobe.size());
    for (const CartesianPoint& p : lobe) {
      mirrored.push_back({-p.x, p.y});
    }
    append_polyline(svg, "lemniscate-left", mirrored, map,
                    "fill=\"none\" stroke=\"#444444\" stroke-width=\"2\"");
  }

  // Bold arc. fig1: lemniscate arc from P = (1, 0) to C, theta in
  // [0, beta]; fig3: radial arc from O to D. Omitted when alpha = 0
  // degenerates it to a point.
  const bool degenerate = alpha == 0.0;
  if (!degenerate) {
    std::vector<CartesianPoint> arc;
    arc.reserve(257);
    if (spec.variant == FigureVariant::fig1) {
      for (int j = 0; j <= 256; ++j) {
        const double theta = beta * (static_cast<double>(j) / 256.0);
        const double r = lemniscate_r(theta);
        arc.push_back({r * std::cos(theta), r * std::sin(theta)});
      }
    } else {
      for (int j = 0; j <= 256; ++j) {
        arc.push_back(
            lemniscate_point_from_r(r_D * (static_cast<double>(j) / 256.0)));
      }
    }
    append_polyline(svg, "arc-bold", arc, map,
                    "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3.5\"");
  }

  // Labeled points.
  svg += "  <g id=\"labels\">\n";
  {
    std::string body;
    append_marker(body, map, {0.0, 0.0}, "O", -20.0, 20.0);
    append_marker(body, map, {1.0, 0.0}, "P", 8.0, 20.0);
    append_marker(body, map, {r_B * std::cos(alpha), r_B * std::sin(alpha)},
                  "B", 8.0, -8.0);
    append_marker(body, map, radial_projection_to_squircle(alpha),
                  "B\xE2\x80\xB2", 8.0, -8.0);
    if (spec.variant == FigureVariant::fig1) {
      append_marker(body, map, {r_C * std::cos(beta), r_C * std::sin(beta)},
                    "C", -20.0, -8.0);
    } else {
      append_marker(body, map, lemniscate_point_from_r(r_D), "D", -20.0, -8.0);
    }
    // Two-space indent inside the group.
    std::string indented;
    indented.reserve(body.size() + 64);
    for (std::size_t i = 0; i < body.size(); ++i) {
      indented += body[i];
      if (body[i] == '\n' && i + 1 < body.size()) {
        indented += "  ";
      }
    }
    svg += "  ";
    svg += indented;
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace sqlem
