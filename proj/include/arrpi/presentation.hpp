#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arrpi/meridians.hpp"
#include "arrpi/sweep.hpp"
#include "arrpi/word.hpp"

namespace arrpi {

struct Presentation {
  GeneratorNames names;
  std::vector<Relation> relators;

  std::size_t generator_count() const { return names.size(); }
  std::vector<Word> relator_words() const;
  std::size_t total_length() const;
  /// Throws PresentationError for empty relators or out-of-range generators.
  void validate() const;
};

/// Generators x1..xn of the initial base; every finite-point relator family.
Presentation complement_presentation(const SweepResult& result);

/// A weight r in N* ∪ {inf}, or a named symbolic weight.
class Weight {
 public:
  static Weight finite(std::uint64_t value);
  static Weight infinity() { return Weight(Kind::Infinite, 0, {}); }
  static Weight symbol(std::string name);
  /// `inf`, a positive integer, or an identifier. Throws PresentationError.
  static Weight parse(std::string_view text);

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_symbolic() const { return kind_ == Kind::Symbolic; }
  std::uint64_t value() const { return value_; }
  const std::string& name() const { return name_; }
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  enum class Kind { Finite, Infinite, Symbolic };
  Weight(Kind kind, std::uint64_t value, std::string name)
      : kind_(kind), value_(value), name_(std::move(name)) {}
  Kind kind_;
  std::uint64_t value_;
  std::string name_;
};

/// Weights over the lines (canonical affine lines, then L_inf) followed by the
/// singular points in sweep order.
struct WeightVector {
  std::vector<Weight> weights;

  static WeightVector uniform(std::size_t lines, std::size_t points, const Weight& w);
  /// Comma or whitespace separated Weight::parse tokens.
  static WeightVector parse(std::string_view text);
};

/// base^weight; symbolic weights stay unevaluated.
struct PowerRelator {
  Word base;
  Weight weight;
  std::string origin;  // "L<i>" for lines, "E<j>" for the divisor over p<j>
};

struct OrbifoldPresentation {
  Presentation base;
  std::vector<PowerRelator> powers;  // finite and symbolic weights only

  bool symbolic() const;
  /// Complement relators followed by the evaluated powers. Throws
  /// PresentationError when a weight is symbolic.
  Presentation concrete() const;
};

/// Adds gamma_L^rL for every line and gamma_p^rp for every singular point with
/// a weight other than infinity. Throws PresentationError on length mismatch.
OrbifoldPresentation orbifold_presentation(const SweepResult& result, const MeridianTable& table,
                                           const WeightVector& weights);

}  // namespace arrpi
