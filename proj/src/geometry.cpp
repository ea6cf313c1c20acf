#include "arrpi/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arrpi/errors.hpp"

namespace arrpi {

namespace {

template <std::size_t N>
std::array<Rational, N> scale_to_leading_one(const std::array<Rational, N>& raw) {
  auto lead = std::find_if(raw.begin(), raw.end(), [](const Rational& v) { return v != 0; });
  std::array<Rational, N> out = raw;
  if (lead == raw.end()) return out;
  Rational factor = *lead;
  for (auto& v : out) v /= factor;
  return out;
}

Rational cross(const Direction& a, const Direction& b) { return a.dx * b.dy - a.dy * b.dx; }

struct PointLess {
  bool operator()(const Point2& a, const Point2& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

}  // namespace

ProjectiveLine normalize_line(const std::array<Rational, 3>& raw) {
  if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0)
    throw GeometryError("line with all coefficients zero");
  return ProjectiveLine{scale_to_leading_one(raw)};
}

ProjectivePoint normalize_point(const std::array<Rational, 3>& raw) {
  if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0)
    throw GeometryError("point with all coordinates zero");
  return ProjectivePoint{scale_to_leading_one(raw)};
}

bool incident(const ProjectiveLine& line, const ProjectivePoint& point) {
  Rational dot = 0;
  for (std::size_t i = 0; i < 3; ++i) dot += line.coeffs[i] * point.coords[i];
  return dot == 0;
}

ProjectivePoint meet(const ProjectiveLine& a, const ProjectiveLine& b) {
  const auto& u = a.coeffs;
  const auto& v = b.coeffs;
  std::array<Rational, 3> c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                            u[0] * v[1] - u[1] * v[0]};
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw GeometryError("meet of coincident lines");
  return normalize_point(c);
}

void ArrangementSpec::validate() const {
  if (lines.empty()) throw GeometryError("arrangement has no lines");
  if (infinity_index >= lines.size())
    throw GeometryError("infinity index " + std::to_string(infinity_index + 1) +
                        " out of range");
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j])
        throw GeometryError("lines " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) + " coincide");
}

std::vector<ChartLine> chart_lines(const ArrangementSpec& spec) {
  spec.validate();
  const auto& inf = spec.lines[spec.infinity_index].coeffs;
  // w = inf·z becomes the third coordinate; the pivot is the last coordinate
  // with nonzero coefficient, the other two coordinates are kept as x and y.
  std::size_t pivot = 2;
  while (inf[pivot] == 0) --pivot;
  std::array<std::size_t, 2> keep{};
  for (std::size_t i = 0, k = 0; i < 3; ++i)
    if (i != pivot) keep[k++] = i;

  std::vector<ChartLine> out;
  for (std::size_t idx = 0; idx < spec.lines.size(); ++idx) {
    if (idx == spec.infinity_index) continue;
    const auto& m = spec.lines[idx].coeffs;
    Rational r = m[pivot] / inf[pivot];
    out.push_back(ChartLine{m[keep[0]] - r * inf[keep[0]], m[keep[1]] - r * inf[keep[1]], r, idx});
  }
  return out;
}

ShearResult shear_to_generic(std::span<const ChartLine> lines) {
  // Line a·x + b·y + c becomes a·x + (b - lambda·a)·y + c, vertical iff lambda = b/a.
  std::vector<Rational> forbidden;
  for (const auto& l : lines)
    if (l.a != 0) forbidden.push_back(l.b / l.a);
  Integer lambda = 0;
  while (std::find(forbidden.begin(), forbidden.end(), Rational(lambda)) != forbidden.end())
    ++lambda;

  ShearResult result;
  result.lambda = Rational(lambda);
  for (const auto& l : lines) {
    Rational b = l.b - result.lambda * l.a;
    if (b == 0 && l.a == 0) throw GeometryError("degenerate chart line (line at infinity twice?)");
    result.lines.push_back(AffineLine{-l.a / b, -l.c / b, l.source_index});
  }
  return result;
}

AffineChart to_affine_chart(const ArrangementSpec& spec) {
  auto raw = chart_lines(spec);
  auto sheared = shear_to_generic(raw);
  return AffineChart{std::move(sheared.lines), sheared.lambda};
}

int compare_angle(const Direction& a, const Direction& b) {
  Rational c = cross(a, b);
  if (c > 0) return -1;
  if (c < 0) return 1;
  return 0;
}

std::vector<SingularPoint> singular_points(std::span<const AffineLine> lines,
                                           bool has_infinity_line) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i].slope == lines[j].slope && lines[i].intercept == lines[j].intercept)
        throw GeometryError("coincident affine lines");

  std::map<Point2, std::vector<std::size_t>, PointLess> finite;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      Rational x = (lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope);
      auto& members = finite[Point2{x, lines[i].height_at(x)}];
      for (std::size_t k : {i, j})
        if (std::find(members.begin(), members.end(), k) == members.end()) members.push_back(k);
    }

  std::vector<SingularPoint> out;
  for (auto& [location, members] : finite) {
    std::sort(members.begin(), members.end());
    SingularPoint p;
    p.kind = PointKind::Finite;
    p.location = location;
    p.lines = members;
    p.multiplicity = members.size();
    out.push_back(std::move(p));
  }

  std::map<Rational, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < lines.size(); ++i) classes[lines[i].slope].push_back(i);
  for (auto& [slope, members] : classes) {
    std::size_t multiplicity = members.size() + (has_infinity_line ? 1 : 0);
    if (multiplicity < 2) continue;
    SingularPoint p;
    p.kind = PointKind::Infinite;
    p.slope = slope;
    p.lines = members;
    p.on_infinity_line = has_infinity_line;
    p.multiplicity = multiplicity;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<Direction> event_directions(std::span<const AffineLine> lines,
                                        std::span<const SingularPoint> points,
                                        const Point2& q) {
  std::vector<Direction> dirs;
  for (const auto& p : points)
    if (p.finite()) dirs.push_back(Direction{p.location.x - q.x, p.location.y - q.y});
  std::vector<Rational> slopes;
  for (const auto& l : lines) slopes.push_back(l.slope);
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  for (const auto& m : slopes) dirs.push_back(Direction{Rational(-1), -m});
  return dirs;
}

bool directions_distinct(std::vector<Direction> dirs) {
  std::sort(dirs.begin(), dirs.end(),
            [](const Direction& a, const Direction& b) { return compare_angle(a, b) < 0; });
  for (std::size_t i = 1; i < dirs.size(); ++i)
    if (compare_angle(dirs[i - 1], dirs[i]) == 0) return false;
  return true;
}

}  // namespace

BasePoint choose_base_point(std::span<const AffineLine> lines,
                            std::span<const SingularPoint> points) {
  Rational max_x = 0;
  bool any_finite = false;
  for (const auto& p : points)
    if (p.finite()) {
      if (!any_finite || p.location.x > max_x) max_x = p.location.x;
      any_finite = true;
    }
  Rational q1 = max_x + 1;

  Rational q2 = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Rational h = lines[i].height_at(q1);
    if (i == 0 || h < q2) q2 = h;
  }
  q2 -= 1;
  // Each coincidence of two event angles pins q2 to a single value on the
  // vertical line x = q1, so the ladder terminates.
  while (!directions_distinct(event_directions(lines, points, Point2{q1, q2}))) q2 -= 1;
  return BasePoint{Point2{q1, q2}};
}

std::vector<SweepEvent> build_sweep_schedule(std::span<const AffineLine> lines,
                                             std::span<const SingularPoint> points,
                                             const BasePoint& base) {
  const Point2& q = base.q;
  std::vector<SweepEvent> events;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!p.finite()) continue;
    if (p.location.x >= q.x)
      throw GeometryError("base point is not to the right of singular point " +
                          to_string(p.location));
    events.push_back(SweepEvent{EventKind::Finite,
                                Direction{p.location.x - q.x, p.location.y - q.y}, i, p.lines});
  }
  std::map<Rational, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < lines.size(); ++i) classes[lines[i].slope].push_back(i);
  for (auto& [slope, members] : classes) {
    SweepEvent e{EventKind::Infinity, Direction{Rational(-1), -slope}, std::nullopt, members};
    for (std::size_t i = 0; i < points.size(); ++i)
      if (!points[i].finite() && points[i].slope == slope) e.point = i;
    events.push_back(std::move(e));
  }
  std::stable_sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
    return compare_angle(a.direction, b.direction) < 0;
  });
  for (std::size_t i = 1; i < events.size(); ++i)
    if (compare_angle(events[i - 1].direction, events[i].direction) == 0)
      throw GeometryError("genericity violation: two events share a pencil direction");
  return events;
}

std::vector<std::size_t> fiber_order(std::span<const AffineLine> lines, const Point2& q,
                                     const Direction& d) {
  std::vector<Rational> params;
  params.reserve(lines.size());
  for (const auto& l : lines) {
    Rational denom = d.dy - l.slope * d.dx;
    if (denom == 0) throw GeometryError("pencil line parallel to an arrangement line");
    params.push_back((l.slope * q.x + l.intercept - q.y) / denom);
  }
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return params[a] < params[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (params[order[i - 1]] == params[order[i]])
      throw GeometryError("pencil line passes through a singular point");
  return order;
}

PreparedArrangement prepare(const ArrangementSpec& spec) {
  PreparedArrangement out;
  out.spec = spec;
  auto chart = to_affine_chart(spec);
  out.shear = chart.shear;

  auto first_points = singular_points(chart.lines, true);
  out.base = choose_base_point(chart.lines, first_points);

  auto order = fiber_order(chart.lines, out.base.q, Direction{Rational(0), Rational(1)});
  for (std::size_t i : order) out.lines.push_back(chart.lines[i]);

  auto points = singular_points(out.lines, true);
  out.events = build_sweep_schedule(out.lines, points, out.base);
  for (std::size_t i = 0; i < out.events.size(); ++i) {
    auto& e = out.events[i];
    if (!e.point) throw GeometryError("sweep event without a singular point");
    SingularPoint p = points[*e.point];
    p.label = out.points.size() + 1;
    e.point = out.points.size();
    const auto& first = spec.lines[out.lines[p.lines[0]].source_index];
    const auto& second = p.finite() ? spec.lines[out.lines[p.lines[1]].source_index]
                                    : spec.lines[spec.infinity_index];
    out.point_coordinates.push_back(meet(first, second));
    out.points.push_back(std::move(p));
  }
  return out;
}

std::string to_string(const Point2& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::string to_string(const ProjectivePoint& p) {
  return to_string(p.coords[0]) + ":" + to_string(p.coords[1]) + ":" + to_string(p.coords[2]);
}

}  // namespace arrpi
