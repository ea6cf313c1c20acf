#include <doctest.h>

#include <set>

#include "arrpi/errors.hpp"
#include "arrpi/geometry.hpp"
#include "support.hpp"

using namespace arrpi;
using arrpi::testing::line;

TEST_CASE("normalize_line") {
  CHECK(line(2, 4, 6) == line(1, 2, 3));
  auto l = line(0, -3, 3);
  CHECK(l.coeffs[0] == 0);
  CHECK(l.coeffs[1] == 1);
  CHECK(l.coeffs[2] == -1);
  CHECK_THROWS_AS(line(0, 0, 0), GeometryError);
  auto r = normalize_line({Rational(1, 2), Rational(1, 3), Rational(0)});
  CHECK(r.coeffs[1] == Rational(2, 3));
}

TEST_CASE("points and incidence") {
  auto p = meet(line(1, 0, 0), line(0, 1, 0));
  CHECK(p == normalize_point({Rational(0), Rational(0), Rational(1)}));
  CHECK(incident(line(1, 1, 0), p));
  CHECK_FALSE(incident(line(0, 0, 1), p));
  CHECK_THROWS_AS(meet(line(1, 2, 3), line(2, 4, 6)), GeometryError);
  CHECK_THROWS_AS(normalize_point({Rational(0), Rational(0), Rational(0)}), GeometryError);
}

TEST_CASE("spec validation") {
  ArrangementSpec s{{line(1, 0, 0), line(0, 1, 0)}, 2, ""};
  CHECK_THROWS_AS(s.validate(), GeometryError);
  s.infinity_index = 1;
  CHECK_NOTHROW(s.validate());
  s.lines.push_back(line(2, 0, 0));
  CHECK_THROWS_AS(s.validate(), GeometryError);
  CHECK_THROWS_AS(ArrangementSpec{}.validate(), GeometryError);
}

TEST_CASE("quadrilateral chart") {
  auto spec = arrpi::testing::load("quadrilateral.arr");
  auto chart = to_affine_chart(spec);
  REQUIRE(chart.lines.size() == 5);
  std::multiset<Rational> slopes;
  for (const auto& l : chart.lines) slopes.insert(l.slope);
  std::set<Rational> classes(slopes.begin(), slopes.end());
  CHECK(classes.size() == 3);
  std::size_t pairs = 0, singles = 0;
  for (const auto& s : classes) (slopes.count(s) == 2 ? pairs : singles) += 1;
  CHECK(pairs == 2);
  CHECK(singles == 1);

  auto pts = singular_points(chart.lines, true);
  std::size_t finite = 0, triple = 0;
  for (const auto& p : pts) {
    if (p.finite()) ++finite;
    triple += p.multiplicity == 3;
  }
  CHECK(finite == 4);
  CHECK(pts.size() == 7);
  CHECK(triple == 4);
}

TEST_CASE("quadrilateral preparation") {
  auto a = prepare(arrpi::testing::load("quadrilateral.arr"));
  CHECK(a.shear == 0);
  CHECK(a.base.q == Point2{Rational(3, 2), Rational(-5, 2)});
  REQUIRE(a.events.size() == 7);
  std::vector<std::vector<std::size_t>> expected{{1, 2, 3}, {1, 4}, {0, 3}, {0, 2, 4}, {0, 1}, {2}, {3, 4}};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(a.events[i].lines == expected[i]);
    CHECK(a.points[i].label == i + 1);
    CHECK((a.events[i].kind == EventKind::Finite) == (i < 4));
  }
  for (const auto& p : a.points) {
    if (!p.finite()) continue;
    CHECK(p.location.x < a.base.q.x);
  }
  for (const auto& l : a.lines) CHECK(a.base.q.y < l.height_at(a.base.q.x));
  for (std::size_t i = 0; i + 1 < a.events.size(); ++i)
    CHECK(compare_angle(a.events[i].direction, a.events[i + 1].direction) < 0);
}

TEST_CASE("pencils and small charts") {
  for (std::size_t m = 3; m <= 5; ++m) {
    auto spec = arrpi::testing::load("pencil" + std::to_string(m) + ".arr");
    auto a = prepare(spec);
    CHECK(a.line_count() == m - 1);
    CHECK(a.points.size() == 1);
    CHECK_FALSE(a.points[0].finite());
    CHECK(a.points[0].multiplicity == m);
  }
  auto two = prepare(arrpi::testing::load("two_lines.arr"));
  CHECK(two.line_count() == 1);
  auto three = prepare(arrpi::testing::load("three_generic.arr"));
  CHECK(three.line_count() == 2);
  CHECK(three.events.size() == 3);
  std::size_t finite = 0;
  for (const auto& e : three.events) finite += e.kind == EventKind::Finite;
  CHECK(finite == 1);
}

TEST_CASE("shear removes vertical lines") {
  ArrangementSpec s{{line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)}, 2, ""};
  auto chart = chart_lines(s);
  bool vertical = false;
  for (const auto& l : chart) vertical = vertical || l.b == 0;
  CHECK(vertical);
  auto sheared = shear_to_generic(chart);
  CHECK(sheared.lambda != 0);
  CHECK(sheared.lines.size() == 2);
}

TEST_CASE("angle order") {
  Direction up_left{Rational(-1), Rational(1)}, left{Rational(-1), Rational(0)}, down_left{Rational(-1), Rational(-1)};
  CHECK(compare_angle(up_left, left) < 0);
  CHECK(compare_angle(left, down_left) < 0);
  CHECK(compare_angle(down_left, up_left) > 0);
  CHECK(compare_angle(Direction{Rational(-2), Rational(0)}, left) == 0);
}

TEST_CASE("fiber order") {
  std::vector<AffineLine> lines{{Rational(1), Rational(0), 0}, {Rational(-1), Rational(0), 1}};
  auto order = fiber_order(lines, Point2{Rational(2), Rational(-10)}, Direction{Rational(0), Rational(1)});
  CHECK(order == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(fiber_order(lines, Point2{Rational(0), Rational(-10)}, Direction{Rational(0), Rational(1)}),
                  GeometryError);
}

TEST_CASE("random arrangements prepare") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    auto spec = arrpi::testing::random_arrangement(rng);
    auto a = prepare(spec);
    CHECK(a.line_count() + 1 == spec.lines.size());
    for (std::size_t j = 0; j < a.points.size(); ++j) CHECK(a.points[j].label == j + 1);
  }
}
