#include <doctest.h>

#include <random>

#include "arrpi/analysis.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/invariants.hpp"
#include "support.hpp"

using namespace arrpi;

namespace {

Presentation group(std::size_t gens, std::initializer_list<std::string_view> rels) {
  Presentation p;
  p.names = GeneratorNames::standard(gens);
  for (auto r : rels) p.relators.push_back(Relation{parse_word(r), ""});
  return p;
}

}  // namespace

TEST_CASE("matrices") {
  IntegerMatrix a{{1, 2}, {3, 4}};
  CHECK(a.determinant() == -2);
  CHECK(IntegerMatrix::identity(3).is_identity());
  CHECK(IntegerMatrix::parse("[[1, 2], [3, 4]]") == a);
  CHECK(IntegerMatrix::parse(" [[-1,0],[0,1]] ").determinant() == -1);
  CHECK_THROWS_AS(IntegerMatrix::parse("[[1,2],[3]]"), InputError);
  CHECK_THROWS_AS(IntegerMatrix::parse("[[1,x]]"), InputError);
  IntegerMatrix u{{2, 1}, {1, 1}};
  CHECK((u * u.unimodular_inverse()).is_identity());
  CHECK_THROWS_AS(a.unimodular_inverse(), InvariantsError);
  CHECK(a.to_string() == "[[1,2],[3,4]]");
  IntegerMatrix big{{1, 0, 2}, {0, 3, 0}, {4, 0, 5}};
  CHECK(big.determinant() == -9);
}

TEST_CASE("smith normal form") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(s.u.determinant()) == 1);
    CHECK(abs(s.v.determinant()) == 1);
    auto d = s.diagonal();
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      else CHECK(d[i + 1] == 0);
    }
  }
  auto s = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
  CHECK(s.diagonal() == std::vector<Integer>{1, 6});
}

TEST_CASE("abelianization") {
  CHECK(abelianization(group(2, {"x1 x2 x1^-1 x2^-1"})).to_string() == "Z^2");
  auto klein = abelianization(group(2, {"x1^2", "(x2 x1)^2"}));
  CHECK(klein.free_rank == 0);
  CHECK(klein.torsion == std::vector<Integer>{2, 2});
  CHECK(klein.order() == Integer(4));
  CHECK(klein.to_string() == "Z/2 x Z/2");
  CHECK(abelianization(group(1, {"x1^6", "x1^4"})).to_string() == "Z/2");
  CHECK(abelianization(group(1, {"x1"})).trivial());
  CHECK(abelianization(group(1, {"x1"})).to_string() == "1");
  CHECK(abelianization(group(2, {"x1^3"})).to_string() == "Z x Z/3");
  CHECK_FALSE(abelianization(group(1, {})).order());
  auto quad = analyze(arrpi::testing::load("quadrilateral.arr")).complement();
  CHECK(relation_matrix(quad).rows() == 6);
  CHECK(abelianization(quad).to_string() == "Z^5");
}

TEST_CASE("homomorphism checks") {
  auto dinf = group(2, {"x1^2", "(x2 x1)^2"});
  std::vector<IntegerMatrix> images{IntegerMatrix{{-1, 0}, {0, 1}}, IntegerMatrix{{1, 1}, {0, 1}}};
  CHECK(verify_homomorphism(dinf, images).pass);
  CHECK(evaluate(parse_word("x1 x2 x1"), images) == IntegerMatrix{{1, -1}, {0, 1}});
  CHECK(matrix_infinite_order(evaluate(parse_word("x1 x2 x1"), images)));
  CHECK_FALSE(matrix_infinite_order(images[0]));
  CHECK_FALSE(matrix_infinite_order(IntegerMatrix{{0, -1}, {1, 1}}));

  auto wrong = group(2, {"x2^2"});
  auto check = verify_homomorphism(wrong, images);
  CHECK_FALSE(check.pass);
  CHECK(check.failing_relator == std::size_t{0});

  std::vector<IntegerMatrix> one{images[0]};
  CHECK_THROWS_AS(verify_homomorphism(dinf, one), InvariantsError);
  std::vector<IntegerMatrix> singular{IntegerMatrix{{2, 0}, {0, 1}}, images[1]};
  CHECK_THROWS_AS(verify_homomorphism(dinf, singular), InvariantsError);
  std::vector<IntegerMatrix> mixed{IntegerMatrix::identity(3), images[1]};
  CHECK_THROWS_AS(verify_homomorphism(dinf, mixed), InvariantsError);
  CHECK_THROWS_AS(matrix_infinite_order(IntegerMatrix::identity(3)), InvariantsError);
}

TEST_CASE("coset enumeration") {
  std::vector<Word> none;
  auto z2 = coset_enumeration(group(1, {"x1^2"}), none, 1000);
  CHECK(z2.closed);
  CHECK(z2.index == 2);
  auto s3 = coset_enumeration(group(2, {"x1^2", "x2^3", "(x1 x2)^2"}), none, 1000);
  CHECK(s3.closed);
  CHECK(s3.index == 6);
  std::vector<Word> sub{parse_word("x1")};
  CHECK(coset_enumeration(group(2, {"x1^2", "x2^3", "(x1 x2)^2"}), sub, 1000).index == 3);
  auto trivial = coset_enumeration(group(2, {"x1", "x2"}), none, 10);
  CHECK(trivial.closed);
  CHECK(trivial.index == 1);
  auto free = coset_enumeration(group(2, {}), none, 500);
  CHECK_FALSE(free.closed);
  CHECK(free.defined <= 500);
  auto dinf = coset_enumeration(group(2, {"x1^2", "(x2 x1)^2"}), none, 2000);
  CHECK_FALSE(dinf.closed);
}
