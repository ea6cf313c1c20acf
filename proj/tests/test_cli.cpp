#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "arrpi/errors.hpp"
#include "arrpi/export.hpp"
#include "arrpi/io.hpp"
#include "arrpi/svg.hpp"
#include "support.hpp"

using namespace arrpi;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ARRPI_CLI) + " " + args + " 2>/dev/null";
  Run r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("arrpi_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string fx(const std::string& name) { return arrpi::testing::fixture(name); }

}  // namespace

TEST_CASE("arrangement files") {
  auto spec = parse_arrangement("# comment\nname my quad  \nline 1 -1 0\nline 1 1 0 # trailing\n\nline 0 1/2 -1/3\ninfinity 2\n");
  CHECK(spec.name == "my quad");
  CHECK(spec.lines.size() == 3);
  CHECK(spec.infinity_index == 1);
  CHECK(spec.lines[2].coeffs[2] == Rational(-2, 3));

  auto err = [](std::string_view text) -> std::size_t {
    try {
      parse_arrangement(text);
    } catch (const InputError& e) {
      return e.line();
    }
    FAIL("no error for: " << text);
    return 0;
  };
  CHECK(err("") == 0);
  CHECK(err("# only comments\n") == 0);
  CHECK(err("line 1 0 0\nline 2 0 0\ninfinity 1\n") == 2);
  CHECK(err("line 1 0 0\nline 0 1 0\n") == 0);
  CHECK(err("line 1 0 0\ninfinity 3\n") == 2);
  CHECK(err("line 1 0 0\ninfinity 0\n") == 2);
  CHECK(err("line 1 x 0\ninfinity 1\n") == 1);
  CHECK(err("line 1 0\ninfinity 1\n") == 1);
  CHECK(err("line 0 0 0\ninfinity 1\n") == 1);
  CHECK(err("line 1 0 0\ncurve 1\ninfinity 1\n") == 2);
  CHECK(err("line 1 0 0\ninfinity 1\ninfinity 1\n") == 3);
  CHECK_THROWS_AS(read_arrangement_file("/nonexistent/file.arr"), InputError);

  auto quad = arrpi::testing::load("quadrilateral.arr");
  CHECK(quad.lines.size() == 6);
  CHECK(quad.infinity_index == 5);
}

TEST_CASE("print round trip") {
  auto quad = arrpi::testing::load("quadrilateral.arr");
  auto back = parse_arrangement(print_arrangement(quad));
  CHECK(back.lines == quad.lines);
  CHECK(back.infinity_index == quad.infinity_index);
  CHECK(back.name == quad.name);
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    auto s = arrpi::testing::random_arrangement(rng);
    auto t = parse_arrangement(print_arrangement(s));
    CHECK(t.lines == s.lines);
    CHECK(t.infinity_index == s.infinity_index);
    CHECK(print_arrangement(t) == print_arrangement(s));
  }
}

TEST_CASE("projective points") {
  CHECK(parse_projective_point("2:4:2") == normalize_point({Rational(1), Rational(2), Rational(1)}));
  CHECK(parse_projective_point("0:1/2:0") == normalize_point({Rational(0), Rational(1), Rational(0)}));
  CHECK_THROWS_AS(parse_projective_point("1:2"), InputError);
  CHECK_THROWS_AS(parse_projective_point("1:2:3:4"), InputError);
  CHECK_THROWS_AS(parse_projective_point("0:0:0"), InputError);
}

TEST_CASE("presentation exports") {
  Presentation p;
  p.names = GeneratorNames({"x2", "x3"});
  p.relators = {Relation{Word{1, 2, 1, 2}, "E4"}, Relation{Word{1, 1}, "E5"}, Relation{Word{-2, 1}, ""}};
  CHECK(compact(p) == "< x2, x3 | x2 x3 x2 x3, x2^2, x3^-1 x2 >");
  CHECK(to_text(p) == "generators x2 x3\nrelator E4 x2 x3 x2 x3\nrelator E5 x2^2\nrelator - x3^-1 x2\n");
  CHECK(to_gap(p) == "F := FreeGroup(\"x2\", \"x3\");;\nG := F / [ F.1*F.2*F.1*F.2, F.1^2, F.2^-1*F.1 ];;\n");
  Presentation empty;
  CHECK(to_gap(empty) == "F := FreeGroup(0);;\nG := F / [ ];;\n");

  for (Format f : {Format::Text, Format::Json}) {
    Presentation q = parse_presentation(render(p, f));
    CHECK(q.names.names() == p.names.names());
    REQUIRE(q.relators.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(q.relators[i].relator == p.relators[i].relator);
      CHECK(q.relators[i].origin == p.relators[i].origin);
    }
  }
  CHECK(parse_format("gap") == Format::Gap);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
  CHECK_THROWS_AS(parse_presentation("{\"generators\": [\"a\"], \"relators\": [{\"word\": [2]}]}"), InputError);
  CHECK_THROWS_AS(parse_presentation("{ broken"), InputError);
  CHECK_THROWS_AS(parse_presentation("relator - x1\n"), InputError);
  CHECK_THROWS_AS(parse_presentation("generators a\nrelator - b\n"), InputError);
}

TEST_CASE("meridian and orbifold exports") {
  auto a = analyze(arrpi::testing::load("quadrilateral.arr"));
  auto text = render_meridians(a, Format::Text);
  CHECK(text.find("p1 finite x4 x3 x2\n") != std::string::npos);
  CHECK(text.find("L6 line=6 infinity x1^-1 x2^-1 x3^-1 x4^-1 x5^-1\n") != std::string::npos);
  CHECK(render_meridians(a, Format::Json).find("\"name\": \"p7\"") != std::string::npos);
  CHECK_THROWS_AS(render_meridians(a, Format::Gap), InputError);

  auto op = orbifold_presentation(a.sweep, a.meridians, WeightVector::parse("n1,n2,n3,n4,n5,n6,m1,inf,inf,m2,m3,inf,m4"));
  auto sym = render(op, Format::Text);
  CHECK(sym.find("power L1 n1 x1\n") != std::string::npos);
  CHECK(sym.find("power E1 m1 x4 x3 x2\n") != std::string::npos);
  CHECK(render(op, Format::Json).find("\"weight\": \"m4\"") != std::string::npos);
  CHECK_THROWS_AS(render(op, Format::Gap), PresentationError);
  auto concrete = orbifold_presentation(a.sweep, a.meridians, WeightVector::uniform(6, 7, Weight::finite(2)));
  CHECK(render(concrete, Format::Gap).find("F.1^2") != std::string::npos);
}

TEST_CASE("svg figure") {
  auto quad = prepare(arrpi::testing::load("quadrilateral.arr"));
  std::string svg = render_svg(quad);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count("stroke=\"#246\"") == 5);
  CHECK(count("stroke-dasharray") == 7);
  CHECK(count("fill=\"#c33\"") == 4);
  CHECK(count(">q</text>") == 1);
  CHECK(count(">p7</text>") == 1);
  CHECK(svg == render_svg(quad));

  auto one = prepare(parse_arrangement("line 1 0 0\ninfinity 1\n"));
  std::string single = render_svg(one);
  CHECK(single.find("stroke=\"#246\"") == std::string::npos);
  CHECK(single.find("#c33") == std::string::npos);
  CHECK_THROWS_AS(render_svg(PreparedArrangement{}), GeometryError);
}

TEST_CASE("command line") {
  auto present = run("present " + fx("quadrilateral.arr"));
  CHECK(present.code == 0);
  CHECK(present.out.rfind("generators x1 x2 x3 x4 x5\n", 0) == 0);
  CHECK(run("present " + fx("quadrilateral.arr")).out == present.out);

  auto three = run("present --simplify " + fx("three_generic.arr"));
  CHECK(three.out == "generators x1 x2\nrelator p1 x1 x2 x1^-1 x2^-1\n");

  auto ab = run("abelianize " + fx("quadrilateral.arr"));
  CHECK(ab.out == "Z^5\n");

  std::string h = temp("h.json", run("lac " + fx("quadrilateral.arr") + " --points p1,p2,p3,p4,p5 --simplify --format json").out);
  CHECK(run("abelianize --presentation " + h).out == "Z/2 x Z/2\norder 4\n");
  auto hom = run("check-hom --presentation " + h + " --images '[[-1,0],[0,1]];[[1,1],[0,1]]' --infinite-order 'x2 x3 x2'");
  CHECK(hom.code == 0);
  CHECK(hom.out.find("has infinite order") != std::string::npos);
  CHECK(run("check-hom --presentation " + h + " --images '[[1,1],[0,1]];[[-1,0],[0,1]]'").code == 8);
  std::string mats = temp("images.txt", "[[-1,0],[0,1]]\n[[1,1],[0,1]]\n");
  CHECK(run("check-hom --presentation " + h + " --images @" + mats).code == 0);
  CHECK(run("enumerate --presentation " + h + " --max 2000").out.rfind("inconclusive\n", 0) == 0);

  std::string ones = "1,1,1,1,1,1,1,1,1,1,1,1,1";
  std::string orb = temp("orb.txt", run("orbifold " + fx("quadrilateral.arr") + " --weights " + ones).out);
  CHECK(run("abelianize --presentation " + orb).out == "1\norder 1\n");
  CHECK(run("enumerate --presentation " + orb + " --max 100000").out.rfind("index 1\n", 0) == 0);

  auto lac_text = run("lac " + fx("quadrilateral.arr") + " --points p1,p2,p3,p4,p5");
  CHECK(lac_text.out.find("# reduced datum\n") != std::string::npos);
  CHECK(run("abelianize --presentation " + temp("lac.txt", lac_text.out)).out == "Z/2 x Z/2\norder 4\n");

  std::string svg = (std::filesystem::temp_directory_path() / "arrpi_test_quad.svg").string();
  CHECK(run("plot " + fx("quadrilateral.arr") + " --out " + svg).code == 0);
  CHECK(std::filesystem::file_size(svg) > 0);

  CHECK(run("present " + fx("two_lines.arr") + " --format gap").out == "F := FreeGroup(\"x1\");;\nG := F / [ ];;\n");
  CHECK(run("meridians " + fx("quadrilateral.arr") + " --format json").code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("present").code == 1);
  CHECK(run("present /nonexistent.arr").code == 1);
  CHECK(run("abelianize").code == 1);
  CHECK(run("present " + temp("empty.arr", "")).code == 2);
  CHECK(run("present " + temp("dup.arr", "line 1 0 0\nline 1 0 0\ninfinity 1\n")).code == 2);
  CHECK(run("present " + fx("quadrilateral.arr") + " --format xml").code == 1);
  CHECK(run("orbifold " + fx("quadrilateral.arr") + " --weights 1,2").code == 6);
  CHECK(run("orbifold " + fx("quadrilateral.arr") + " --weights 0,1,1,1,1,1,1,1,1,1,1,1,1").code == 6);
  CHECK(run("orbifold " + fx("quadrilateral.arr") + " --weights n,1,1,1,1,1,1,1,1,1,1,1,1 --format gap").code == 6);
  CHECK(run("lac " + fx("quadrilateral.arr") + " --points p9").code == 2);
  CHECK(run("lac " + fx("quadrilateral.arr") + " --points 5:7:1 --index points").code == 0);
  CHECK(run("lac " + fx("quadrilateral.arr") + " --points p1 --index S4").code == 6);
  CHECK(run("check-hom " + fx("three_generic.arr") + " --images '[[1,0],[0,1]]'").code == 7);
  CHECK(run("check-hom " + fx("three_generic.arr") + " --images '[[1,0],[0,1]];[[1,2]'").code == 2);
  CHECK(run("enumerate " + fx("three_generic.arr") + " --subgroup 'x7'").code == 4);
  CHECK(run("plot " + temp("e2.arr", "# nothing\n") + " --out /dev/null").code == 2);
}
