#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrpi/presentation.hpp"
#include "arrpi/rational.hpp"
#include "arrpi/word.hpp"

namespace arrpi {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major nested list; throws InvariantsError on ragged rows.
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix identity(std::size_t n);
  /// `[[a,b],[c,d]]` with arbitrary-size integers. Throws InputError.
  static IntegerMatrix parse(std::string_view text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool square() const { return rows_ == cols_; }
  bool is_identity() const;
  Integer determinant() const;
  /// Inverse of a matrix with determinant ±1. Throws InvariantsError.
  IntegerMatrix unimodular_inverse() const;
  std::string to_string() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// U·A·V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all >= 0.
struct SmithForm {
  IntegerMatrix u, d, v;
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Group order when finite.
  std::optional<Integer> order() const;
  /// `Z^r x Z/d1 x ...`, `1` for the trivial group.
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Rows are relators, columns generators, entries exponent sums.
IntegerMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);

/// Image of w under generator images of determinant ±1.
IntegerMatrix evaluate(const Word& w, std::span<const IntegerMatrix> images);

struct HomomorphismCheck {
  bool pass = false;
  std::optional<std::size_t> failing_relator;  // first relator not sent to the identity
};

/// Throws InvariantsError on a wrong image count, non-square or mismatched
/// dimensions, or a determinant other than ±1.
HomomorphismCheck verify_homomorphism(const Presentation& p, std::span<const IntegerMatrix> images);

/// For 2x2 integer matrices of determinant ±1: true iff M^12 is not the
/// identity. Throws InvariantsError on any other shape.
bool matrix_infinite_order(const IntegerMatrix& m);

struct CosetResult {
  bool closed = false;
  std::size_t index = 0;    // subgroup index when closed
  std::size_t defined = 0;  // cosets defined in total
};

/// HLT Todd-Coxeter enumeration of the cosets of the subgroup generated by
/// `subgroup`; gives up once `max_cosets` cosets have been defined.
CosetResult coset_enumeration(const Presentation& p, std::span<const Word> subgroup,
                              std::size_t max_cosets);

}  // namespace arrpi
