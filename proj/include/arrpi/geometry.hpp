#pragma once

// Exact geometry of real projective line arrangements: affine charts, shear
// normalization, singular points, base point choice and the angular event
// schedule of the pencil through the base point. Everything is decided by
// sign tests on rationals.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrpi/rational.hpp"

namespace arrpi {

/// a·z1 + b·z2 + c·z3 = 0, first nonzero coefficient equal to 1.
struct ProjectiveLine {
  std::array<Rational, 3> coeffs;

  friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;
};

ProjectiveLine normalize_line(const std::array<Rational, 3>& raw);

/// Homogeneous point, first nonzero coordinate equal to 1.
struct ProjectivePoint {
  std::array<Rational, 3> coords;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

ProjectivePoint normalize_point(const std::array<Rational, 3>& raw);
bool incident(const ProjectiveLine& line, const ProjectivePoint& point);
/// Meet of two distinct lines.
ProjectivePoint meet(const ProjectiveLine& a, const ProjectiveLine& b);

struct ArrangementSpec {
  std::vector<ProjectiveLine> lines;
  std::size_t infinity_index = 0;  // 0-based into `lines`
  std::string name;

  /// Throws GeometryError on duplicate lines or an invalid infinity index.
  void validate() const;
};

/// a·x + b·y + c = 0 in an affine chart; vertical when b == 0.
struct ChartLine {
  Rational a, b, c;
  std::size_t source_index = 0;
};

/// y = slope·x + intercept.
struct AffineLine {
  Rational slope, intercept;
  std::size_t source_index = 0;

  Rational height_at(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const AffineLine&, const AffineLine&) = default;
};

struct ShearResult {
  std::vector<AffineLine> lines;
  Rational lambda;  // substitution x1 -> x1 - lambda·x2
};

/// Picks the smallest nonnegative integer lambda that leaves no vertical line.
ShearResult shear_to_generic(std::span<const ChartLine> lines);

/// The chart P^2 minus L_inf before shearing, one entry per other line.
std::vector<ChartLine> chart_lines(const ArrangementSpec& spec);

struct AffineChart {
  std::vector<AffineLine> lines;  // input order, infinity line skipped
  Rational shear;
};

AffineChart to_affine_chart(const ArrangementSpec& spec);

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Direction vector of an oriented line through the base point.
struct Direction {
  Rational dx, dy;
};

/// Angle comparison for directions in the open half-plane dx < 0, where the
/// pencil parameter lives in (pi/2, 3pi/2). Returns -1, 0 or 1.
int compare_angle(const Direction& a, const Direction& b);

enum class PointKind { Finite, Infinite };

struct SingularPoint {
  PointKind kind = PointKind::Finite;
  Point2 location;                 // finite points
  Rational slope;                  // infinite points: common slope of the class
  std::vector<std::size_t> lines;  // affine line indices, sorted
  bool on_infinity_line = false;   // infinite points with L_inf in the arrangement
  std::size_t multiplicity = 0;
  std::size_t label = 0;  // 1-based sweep ordinal, 0 until scheduled

  bool finite() const { return kind == PointKind::Finite; }
};

/// Finite multiple points and parallel classes at infinity. With an infinity
/// line every slope class meets it, so a lone line gives a double point there.
std::vector<SingularPoint> singular_points(std::span<const AffineLine> lines,
                                           bool has_infinity_line);

struct BasePoint {
  Point2 q;
};

BasePoint choose_base_point(std::span<const AffineLine> lines,
                            std::span<const SingularPoint> points);

enum class EventKind { Finite, Infinity };

struct SweepEvent {
  EventKind kind = EventKind::Finite;
  Direction direction;
  std::optional<std::size_t> point;  // index into the singular point list
  std::vector<std::size_t> lines;    // incident lines, or the slope class at infinity
};

/// One event per finite singular point and per slope class, sorted by angle.
/// Throws GeometryError when two events share an angle.
std::vector<SweepEvent> build_sweep_schedule(std::span<const AffineLine> lines,
                                             std::span<const SingularPoint> points,
                                             const BasePoint& base);

/// Line indices ordered along the pencil line through q with direction d,
/// oriented by d. Throws GeometryError when d is parallel to a line or two
/// lines cross the pencil line at the same point.
std::vector<std::size_t> fiber_order(std::span<const AffineLine> lines, const Point2& q,
                                     const Direction& d);

/// Full geometric preparation of an arrangement for the sweep. Affine lines are
/// renumbered bottom-to-top along the vertical fiber through q, singular points
/// are sorted and labelled by sweep order, and events[i].point, when present, is
/// the index of the i-th labelled point.
struct PreparedArrangement {
  ArrangementSpec spec;
  Rational shear;
  std::vector<AffineLine> lines;
  std::vector<SingularPoint> points;
  std::vector<ProjectivePoint> point_coordinates;  // parallel to points
  BasePoint base;
  std::vector<SweepEvent> events;

  std::size_t line_count() const { return lines.size(); }
  /// Arrangement index of canonical affine line i.
  std::size_t source_of(std::size_t i) const { return lines[i].source_index; }
};

PreparedArrangement prepare(const ArrangementSpec& spec);

std::string to_string(const Point2& p);
std::string to_string(const ProjectivePoint& p);

}  // namespace arrpi
