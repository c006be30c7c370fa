#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "ped/drawing.hpp"

namespace ped {

struct SvgOptions {
  bool dotted = false;      // also draw the omitted central pieces, dashed
  double stroke = 0.15;     // relative to drawing diameter
  double vertex_radius = 0.4;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline void emit_line(std::ostringstream& out, Point a, Point b, const char* cls, double w,
                      bool dashed) {
  out << "  <line class=\"" << cls << "\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y)
      << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\" stroke=\""
      << (dashed ? "#999999" : "#1f4e79") << "\" stroke-width=\"" << fmt(w) << "\"";
  if (dashed) out << " stroke-dasharray=\"" << fmt(2 * w) << " " << fmt(2 * w) << "\"";
  out << " stroke-linecap=\"round\"/>\n";
}

}  // namespace detail

// Deterministic SVG for a drawing, optionally restricted to the drawn parts
// of a solution. Solid `part` lines carry the drawn ink; omitted pieces
// appear dashed only when requested.
inline std::string render_svg(const Drawing& d, const Solution* sol = nullptr,
                              const SvgOptions& opt = {}) {
  if (sol && sol->assignment.size() != d.segments.size())
    throw ParseError("solution does not match drawing (segment count)");
  double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
  if (!d.vertices.empty()) {
    lo_x = hi_x = d.vertices[0].p.x;
    lo_y = hi_y = d.vertices[0].p.y;
    for (const auto& v : d.vertices) {
      lo_x = std::min(lo_x, v.p.x);
      hi_x = std::max(hi_x, v.p.x);
      lo_y = std::min(lo_y, v.p.y);
      hi_y = std::max(hi_y, v.p.y);
    }
  }
  const double diam = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double margin = 0.05 * diam;
  const double w = opt.stroke * diam / 20.0;
  const double vr = opt.vertex_radius * diam / 20.0;
  using detail::emit_line;
  using detail::fmt;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(lo_x - margin) << " "
      << fmt(lo_y - margin) << " " << fmt(hi_x - lo_x + 2 * margin) << " "
      << fmt(hi_y - lo_y + 2 * margin) << "\">\n";
  for (size_t i = 0; i < d.segments.size(); ++i) {
    const Segment& s = d.segments[i];
    const double len = s.length();
    const Choice c = sol ? sol->assignment[i] : Choice::full(len);
    switch (c.kind) {
      case ChoiceKind::Full:
      case ChoiceKind::NoGapSentinel:
        emit_line(out, s.a, s.b, "part", w, false);
        break;
      case ChoiceKind::SymmetricStubs:
        if (c.stub > 0) {
          emit_line(out, s.a, s.at(c.stub / len), "part", w, false);
          emit_line(out, s.at(1.0 - c.stub / len), s.b, "part", w, false);
        }
        if (opt.dotted && c.stub < len / 2)
          emit_line(out, s.at(c.stub / len), s.at(1.0 - c.stub / len), "omit", w, true);
        break;
      case ChoiceKind::Gap:
        if (c.gap_a > 0) emit_line(out, s.a, s.at(c.gap_a / len), "part", w, false);
        if (c.gap_b < len) emit_line(out, s.at(c.gap_b / len), s.b, "part", w, false);
        if (opt.dotted && c.gap_b > c.gap_a)
          emit_line(out, s.at(c.gap_a / len), s.at(c.gap_b / len), "omit", w, true);
        break;
    }
  }
  for (const auto& v : d.vertices)
    out << "  <circle class=\"vertex\" cx=\"" << fmt(v.p.x) << "\" cy=\"" << fmt(v.p.y)
        << "\" r=\"" << fmt(vr) << "\" fill=\"#202020\"/>\n";
  out << "</svg>\n";
  return out.str();
}

// Total geometric length of the solid `part` lines in rendered output.
// Exists so tests can confirm rendered ink equals solution ink.
inline double svg_solid_length(const std::string& svg) {
  double sum = 0.0;
  size_t at = 0;
  auto attr = [&](const std::string& line, const char* name) {
    size_t p = line.find(std::string(name) + "=\"");
    p += std::string(name).size() + 2;
    return std::stod(line.substr(p));
  };
  while ((at = svg.find("<line class=\"part\"", at)) != std::string::npos) {
    size_t end = svg.find("/>", at);
    std::string line = svg.substr(at, end - at);
    Point a{attr(line, "x1"), attr(line, "y1")}, b{attr(line, "x2"), attr(line, "y2")};
    sum += dist(a, b);
    at = end;
  }
  return sum;
}

}  // namespace ped
