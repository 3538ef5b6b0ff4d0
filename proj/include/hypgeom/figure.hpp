#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hypgeom/geometry.hpp"

namespace hypgeom {

inline std::string format_g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// theta,x,y,x1,y1,x2,y2 with 17 significant digits, LF endings.
inline std::string curve_csv(const CurveSample& s) {
  std::ostringstream out;
  out << "theta,x,y,x1,y1,x2,y2\n";
  for (std::size_t i = 0; i < s.theta.size(); ++i) {
    out << format_g17(s.theta[i]) << ',' << format_g17(s.gamma[i].real()) << ',' << format_g17(s.gamma[i].imag())
        << ',' << format_g17(s.gamma1[i].real()) << ',' << format_g17(s.gamma1[i].imag()) << ','
        << format_g17(s.gamma2[i].real()) << ',' << format_g17(s.gamma2[i].imag()) << '\n';
  }
  return out.str();
}

struct FigureOptions {
  int width = 720;
  int height = 540;
  double margin = 40.0;
  bool show_main_term = true;
};

// Image boundary for theta in (0, pi] and its mirror, the sector rays from the
// apex B and the asymptotic line y = tan(pi delta / 2)(x - B).
inline std::string curve_svg(const CurveSample& s, const FigureOptions& opt = {}) {
  const double phi = std::numbers::pi * s.delta / 2.0;
  const double slope = std::tan(phi);

  double x_lo = s.B, x_hi = s.B, y_hi = 0.0;
  for (const auto& g : s.gamma) {
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) continue;
    x_lo = std::min(x_lo, g.real());
    x_hi = std::max(x_hi, g.real());
    y_hi = std::max(y_hi, std::abs(g.imag()));
  }
  double span = std::max({x_hi - x_lo, 2.0 * y_hi, 1e-9});
  x_lo -= 0.05 * span;
  x_hi += 0.05 * span;
  y_hi += 0.05 * span;
  double y_lo = -y_hi;

  const double w = opt.width - 2 * opt.margin, h = opt.height - 2 * opt.margin;
  const double scale = std::min(w / (x_hi - x_lo), h / (y_hi - y_lo));
  const double cx = opt.margin + 0.5 * (w - scale * (x_hi - x_lo));
  const double cy = opt.margin + 0.5 * (h - scale * (y_hi - y_lo));
  auto px = [&](double x) { return cx + scale * (x - x_lo); };
  auto py = [&](double y) { return cy + scale * (y_hi - y); };

  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  auto polyline = [&](const std::vector<Complex>& pts, bool mirror, const char* style) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::size_t k = mirror ? pts.size() - 1 - i : i;
      double x = pts[k].real(), y = mirror ? -pts[k].imag() : pts[k].imag();
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      d += num(px(x)) + "," + num(py(y)) + " ";
    }
    return "<polyline fill=\"none\" " + std::string(style) + " points=\"" + d + "\"/>\n";
  };

  // ray from B up to the edge of the box along direction angle +-phi
  double t_max = (x_hi - s.B) / std::max(std::cos(phi), 1e-12);
  if (std::abs(std::sin(phi)) > 1e-12) t_max = std::min(t_max, y_hi / std::abs(std::sin(phi)));
  double rx = s.B + t_max * std::cos(phi), ry = t_max * std::sin(phi);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << opt.height
      << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<clipPath id=\"plot\"><rect x=\"" << num(opt.margin) << "\" y=\"" << num(opt.margin) << "\" width=\"" << num(w)
      << "\" height=\"" << num(h) << "\"/></clipPath>\n<g clip-path=\"url(#plot)\">\n";
  out << "<line x1=\"" << num(px(x_lo)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(x_hi)) << "\" y2=\""
      << num(py(0)) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << num(px(s.B)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(rx)) << "\" y2=\""
      << num(py(ry)) << "\" stroke=\"#c0392b\" stroke-width=\"1.2\" stroke-dasharray=\"6,4\"/>\n";
  out << "<line x1=\"" << num(px(s.B)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(rx)) << "\" y2=\""
      << num(py(-ry)) << "\" stroke=\"#c0392b\" stroke-width=\"1.2\" stroke-dasharray=\"6,4\"/>\n";
  if (opt.show_main_term) {
    out << polyline(s.gamma1, false, "stroke=\"#7f8c8d\" stroke-width=\"1\" stroke-dasharray=\"2,3\"");
  }
  out << polyline(s.gamma, false, "stroke=\"#1f4e79\" stroke-width=\"1.8\"");
  out << polyline(s.gamma, true, "stroke=\"#1f4e79\" stroke-width=\"1.8\"");
  out << "</g>\n";
  out << "<circle cx=\"" << num(px(s.B)) << "\" cy=\"" << num(py(0)) << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  out << "<text x=\"" << num(opt.margin) << "\" y=\"" << num(opt.margin * 0.6)
      << "\" font-family=\"sans-serif\" font-size=\"13\">delta = " << num(s.delta) << ", B = " << num(s.B)
      << ", slope tan(pi delta/2) = " << num(slope) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace hypgeom
