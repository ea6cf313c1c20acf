#include "arrpi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <utility>

#include "arrpi/errors.hpp"
#include "arrpi/sweep.hpp"

namespace arrpi {

namespace {

constexpr double kCanvas = 720.0;
constexpr double kMargin = 40.0;

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

struct Box {
  double x0, x1, y0, y1;
};

// Part of the line p + t·d inside the box, if any.
std::optional<std::pair<double, double>> clip(const Box& b, double px, double py, double dx, double dy) {
  double lo = -1e300, hi = 1e300;
  auto side = [&](double p, double d, double min, double max) {
    if (d == 0) return p >= min && p <= max;
    double t0 = (min - p) / d, t1 = (max - p) / d;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    return true;
  };
  if (!side(px, dx, b.x0, b.x1) || !side(py, dy, b.y0, b.y1) || lo >= hi) return std::nullopt;
  return std::pair{lo, hi};
}

class Canvas {
 public:
  Canvas(const Box& box) : box_(box) {
    double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
    scale_ = (kCanvas - 2 * kMargin) / span;
    width_ = (box.x1 - box.x0) * scale_ + 2 * kMargin;
    height_ = (box.y1 - box.y0) * scale_ + 2 * kMargin;
  }

  double x(double v) const { return kMargin + (v - box_.x0) * scale_; }
  double y(double v) const { return kMargin + (box_.y1 - v) * scale_; }

  void segment(double px, double py, double dx, double dy, const std::string& style) {
    auto t = clip(box_, px, py, dx, dy);
    if (!t) return;
    body_ += "  <line x1=\"" + num(x(px + t->first * dx)) + "\" y1=\"" + num(y(py + t->first * dy)) +
             "\" x2=\"" + num(x(px + t->second * dx)) + "\" y2=\"" + num(y(py + t->second * dy)) + "\" " +
             style + "/>\n";
  }

  // Label near the end of the clipped segment where t is largest.
  void end_label(double px, double py, double dx, double dy, const std::string& text, const std::string& fill) {
    auto t = clip(box_, px, py, dx, dy);
    if (!t) return;
    double tx = x(px + t->second * dx), ty = y(py + t->second * dy);
    label(tx + 4, ty - 4, text, fill);
  }

  void dot(double px, double py, double r, const std::string& fill) {
    body_ += "  <circle cx=\"" + num(x(px)) + "\" cy=\"" + num(y(py)) + "\" r=\"" + num(r) + "\" fill=\"" +
             fill + "\"/>\n";
  }

  void label(double sx, double sy, const std::string& text, const std::string& fill) {
    body_ += "  <text x=\"" + num(sx) + "\" y=\"" + num(sy) + "\" fill=\"" + fill + "\">" + text + "</text>\n";
  }

  void point_label(double px, double py, const std::string& text) { label(x(px) + 6, y(py) - 6, text, "black"); }

  std::string finish(const std::string& title) const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) + "\" height=\"" +
                      num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) +
                      "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    if (!title.empty()) out += "  <title>" + title + "</title>\n";
    out += "  <rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(width_ - 2 * kMargin) +
           "\" height=\"" + num(height_ - 2 * kMargin) + "\" fill=\"none\" stroke=\"#888\"/>\n";
    out += "  <text x=\"" + num(kMargin) + "\" y=\"" + num(kMargin - 8) + "\" fill=\"#888\">L" +
           std::to_string(line_count_ + 1) + " (infinity)</text>\n";
    return out + body_ + "</svg>\n";
  }

  std::size_t line_count_ = 0;

 private:
  Box box_;
  double scale_ = 1, width_ = 0, height_ = 0;
  std::string body_;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const PreparedArrangement& a) {
  if (a.spec.lines.empty()) throw GeometryError("cannot draw an empty arrangement");
  double qx = to_double(a.base.q.x), qy = to_double(a.base.q.y);
  Box box{qx, qx, qy, qy};
  for (const auto& p : a.points) {
    if (!p.finite()) continue;
    double px = to_double(p.location.x), py = to_double(p.location.y);
    box.x0 = std::min(box.x0, px);
    box.x1 = std::max(box.x1, px);
    box.y0 = std::min(box.y0, py);
    box.y1 = std::max(box.y1, py);
  }
  for (const auto& l : a.lines) {
    double h = l.height_at(a.base.q.x).convert_to<double>();
    box.y0 = std::min(box.y0, h);
    box.y1 = std::max(box.y1, h);
  }
  double pad = std::max({1.0, 0.25 * (box.x1 - box.x0), 0.25 * (box.y1 - box.y0)});
  box = Box{box.x0 - pad, box.x1 + pad, box.y0 - pad, box.y1 + pad};

  Canvas c(box);
  c.line_count_ = a.line_count();
  for (const auto& e : a.events) {
    double dx = to_double(e.direction.dx), dy = to_double(e.direction.dy);
    c.segment(qx, qy, dx, dy, "stroke=\"#4a7\" stroke-dasharray=\"4 3\"");
  }
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    double m = to_double(a.lines[i].slope), b = to_double(a.lines[i].intercept);
    c.segment(0, b, 1, m, "stroke=\"#246\" stroke-width=\"1.5\"");
    c.end_label(0, b, 1, m, "L" + std::to_string(i + 1), "#246");
  }
  for (const auto& e : a.events) {
    if (!e.point) continue;
    const auto& p = a.points[*e.point];
    if (p.finite()) continue;
    double dx = to_double(e.direction.dx), dy = to_double(e.direction.dy);
    c.end_label(qx, qy, dx, dy, point_name(p.label), "#4a7");
  }
  for (const auto& p : a.points) {
    if (!p.finite()) continue;
    double px = to_double(p.location.x), py = to_double(p.location.y);
    c.dot(px, py, 4, "#c33");
    c.point_label(px, py, point_name(p.label));
  }
  c.dot(qx, qy, 4, "black");
  c.point_label(qx, qy, "q");
  return c.finish(escape(a.spec.name));
}

}  // namespace arrpi
