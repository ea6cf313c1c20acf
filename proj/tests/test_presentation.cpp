#include <doctest.h>

#include <algorithm>

#include "arrpi/analysis.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/lac.hpp"
#include "arrpi/matching.hpp"
#include "arrpi/rewriting.hpp"
#include "arrpi/tietze.hpp"
#include "support.hpp"

using namespace arrpi;

namespace {

Word w(std::string_view s) { return parse_word(s); }

std::vector<Word> canonical_set(const Presentation& p) {
  std::vector<Word> out;
  for (const auto& r : p.relators) out.push_back(canonical_cyclic(r.relator));
  std::sort(out.begin(), out.end());
  return out;
}

const Analysis& quad() {
  static const Analysis a = analyze(arrpi::testing::load("quadrilateral.arr"));
  return a;
}

}  // namespace

TEST_CASE("complement presentation") {
  Presentation p = quad().complement();
  CHECK(p.generator_count() == 5);
  CHECK(p.relators.size() == 6);
  CHECK(p.names[0] == "x1");
  CHECK(p.relators[0].origin == "p1");
  CHECK_NOTHROW(p.validate());
  Presentation bad = p;
  bad.relators.push_back(Relation{Word{}, "x"});
  CHECK_THROWS_AS(bad.validate(), PresentationError);
  bad.relators.back().relator = w("x9");
  CHECK_THROWS_AS(bad.validate(), PresentationError);
}

TEST_CASE("weights") {
  CHECK(Weight::parse("3") == Weight::finite(3));
  CHECK(Weight::parse("inf").is_infinite());
  CHECK(Weight::parse("n1").is_symbolic());
  CHECK(Weight::parse("n1").to_string() == "n1");
  CHECK_THROWS_AS(Weight::parse("0"), PresentationError);
  CHECK_THROWS_AS(Weight::parse("-2"), PresentationError);
  CHECK_THROWS_AS(Weight::parse(""), PresentationError);
  auto v = WeightVector::parse("1, 2 inf,n");
  REQUIRE(v.weights.size() == 4);
  CHECK(v.weights[2].is_infinite());
  CHECK(WeightVector::uniform(6, 7, Weight::finite(1)).weights.size() == 13);
}

TEST_CASE("orbifold presentations") {
  const Analysis& a = quad();
  auto ones = orbifold_presentation(a.sweep, a.meridians, WeightVector::uniform(6, 7, Weight::finite(1)));
  CHECK_FALSE(ones.symbolic());
  CHECK(ones.powers.size() == 13);
  CHECK(ones.powers[5].origin == "L6");
  CHECK(ones.powers[6].origin == "E1");
  Presentation c = ones.concrete();
  CHECK(c.relators.size() == 6 + 13);

  auto mixed = orbifold_presentation(a.sweep, a.meridians, WeightVector::parse("2,2,2,2,2,inf,n,inf,inf,inf,inf,inf,inf"));
  CHECK(mixed.symbolic());
  CHECK(mixed.powers.size() == 6);
  CHECK_THROWS_AS(mixed.concrete(), PresentationError);
  CHECK_THROWS_AS(orbifold_presentation(a.sweep, a.meridians, WeightVector::parse("1,2")), PresentationError);
}

TEST_CASE("rewriting") {
  std::vector<Word> comm{w("x1 x2 x1^-1 x2^-1")};
  CHECK(prove_trivial(comm, w("x2 x1 x2^-1 x1^-1")).trivial);
  CHECK(proves_equal(comm, w("x1 x2 x1"), w("x1 x1 x2")));
  CHECK_FALSE(proves_equal(comm, w("x1"), w("x2"), RewriteOptions{200, 2, 4}));
  RewriteSystem sys(comm, 2);
  CHECK(sys.rule_count() > 0);
  auto out = sys.reduce(w("x1 x2 x1^-1 x2^-1 x1^3"), 1000, 4);
  CHECK(out.best == canonical_cyclic(w("x1^3")));
}

TEST_CASE("matching against table words") {
  const auto& s = quad().sweep;
  std::vector<Word> before;
  for (const auto& r : s.relations_before(1)) before.push_back(r.relator);
  auto m = match_word(s.bases[1].entries[1], w("x4"), before);
  CHECK(m.matched);
  CHECK_FALSE(m.inverted);
  auto inv = match_word(s.bases[1].entries[1], w("x4^-1"), before, true);
  CHECK(inv.matched);
  CHECK(inv.inverted);
  CHECK_FALSE(match_word(s.bases[1].entries[1], w("x4^-1"), before).matched);

  auto entries = parse_bracket("[x5, x3^x2, x1]");
  REQUIRE(entries.size() == 3);
  CHECK(entries[1] == w("x2^-1 x3 x2"));
  CHECK(bracket_relators(entries).size() == 2);
  CHECK_THROWS_AS(parse_bracket("x1, x2]"), WordError);

  std::vector<Word> raw{w("x1 x2 x1^-1 x2^-1")}, target{w("x2 x1 x2^-1 x1^-1")};
  CHECK(match_relator_sets(raw, target, {}));
  std::vector<Word> two{w("x1 x2 x1^-1 x2^-1"), w("x1 x3 x1^-1 x3^-1")};
  CHECK_FALSE(match_relator_sets(two, target, {}));
}

TEST_CASE("tietze") {
  Presentation p;
  p.names = GeneratorNames::standard(2);
  p.relators = {Relation{w("x1 x2^-1"), "a"}, Relation{w("x2^3"), "b"}};
  TietzeLog log;
  Presentation q = tietze_simplify(p, 1000, &log);
  CHECK(q.generator_count() == 1);
  REQUIRE(q.relators.size() == 1);
  CHECK(q.relators[0].relator.size() == 3);
  CHECK_FALSE(log.steps.empty());
  CHECK(tietze_simplify(p, 0).relators.size() == 2);
  CHECK(default_budget(p) == 2000 + 50 * 25);

  Presentation three = analyze(arrpi::testing::load("three_generic.arr")).complement();
  Presentation s = tietze_simplify(three, default_budget(three));
  CHECK(s.generator_count() == 2);
  REQUIRE(s.relators.size() == 1);
  CHECK(canonical_cyclic(s.relators[0].relator) == canonical_cyclic(w("x1 x2 x1^-1 x2^-1")));
}

TEST_CASE("lac reduction rules") {
  ArrangementSpec spec = arrpi::testing::load("quadrilateral.arr");
  LacDatum d;
  d.arrangement = spec;
  d.points = quad().arrangement.point_coordinates;
  d.points.push_back(normalize_point({Rational(5), Rational(7), Rational(1)}));
  for (std::size_t j = 0; j < d.points.size(); ++j) d.index.insert(6 + j);
  CHECK_FALSE(d.reduced());
  std::vector<LacStep> steps;
  LacDatum r = lac_reduce(d, &steps);
  CHECK(r.reduced());
  CHECK(r.points.size() == 7);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].rule == "stray-point");

  LacDatum drop_line = d;
  drop_line.points.pop_back();
  drop_line.index = {0, 6};
  r = lac_reduce(drop_line, &steps);
  CHECK(r.line_count() == 5);
  CHECK(r.reduced());

  LacDatum dup = d;
  dup.points.push_back(dup.points[0]);
  CHECK_THROWS_AS(dup.validate(), PresentationError);
  LacDatum range = d;
  range.index.insert(100);
  CHECK_THROWS_AS(lac_reduce(range), PresentationError);

  CHECK(parse_lac_index("3", 6) == 2);
  CHECK(parse_lac_index("L1", 6) == 0);
  CHECK(parse_lac_index("S2", 6) == 7);
  CHECK_THROWS_AS(parse_lac_index("Q1", 6), InputError);
  CHECK_THROWS_AS(parse_lac_index("0", 6), InputError);
}

TEST_CASE("smooth point rule and full deletion") {
  ArrangementSpec spec = arrpi::testing::load("two_lines.arr");
  LacDatum d;
  d.arrangement = spec;
  d.points = {normalize_point({Rational(0), Rational(1), Rational(5)})};  // on z1 = 0 only
  d.index = {2};
  std::vector<LacStep> steps;
  LacDatum r = lac_reduce(d, &steps);
  REQUIRE_FALSE(steps.empty());
  CHECK(steps[0].rule == "smooth-point");
  CHECK(r.line_count() == 1);
  CHECK(r.points.empty());

  LacDatum all;
  all.arrangement = spec;
  all.index = {0, 1};
  LacGroup g = lac_group(all);
  CHECK(g.reduced.line_count() == 0);
  CHECK(g.presentation.generator_count() == 0);
}

TEST_CASE("counterexample group") {
  LacDatum d;
  d.arrangement = arrpi::testing::load("quadrilateral.arr");
  for (std::size_t j = 0; j < 5; ++j) {
    d.points.push_back(quad().arrangement.point_coordinates[j]);
    d.index.insert(6 + j);
  }
  LacGroup g = lac_group(d);
  CHECK(g.steps.empty());
  CHECK(g.presentation.relators.size() == 11);
  Presentation h = tietze_simplify(g.presentation, default_budget(g.presentation));
  CHECK(h.names.names() == std::vector<std::string>{"x2", "x3"});
  GeneratorNames n = h.names;
  std::vector<Word> want{canonical_cyclic(parse_word("x2^2", &n)), canonical_cyclic(parse_word("(x3 x2)^2", &n))};
  std::sort(want.begin(), want.end());
  CHECK(canonical_set(h) == want);

  LacDatum off = d;
  off.points.push_back(normalize_point({Rational(5), Rational(7), Rational(1)}));
  off.index.insert(11);
  CHECK_THROWS_AS(lac_presentation(quad(), off), PresentationError);
}
