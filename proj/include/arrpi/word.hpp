#pragma once

// Freely reduced words over abstract generators.
//
// Conventions: products are read left to right, and conjugation is
//     x^y = y^-1 x y,
// so (x^y)^z = x^(yz). This is the convention forced by the base transition
// formulas of the pencil sweep.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arrpi {

/// Generator g (0-based) is the letter g+1, its inverse is -(g+1).
using Letter = std::int32_t;

inline Letter letter(std::size_t generator, bool inverse = false) {
  auto l = static_cast<Letter>(generator + 1);
  return inverse ? -l : l;
}
inline std::size_t generator_of(Letter l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }

class Word {
 public:
  Word() = default;
  /// Freely reduces the given letters.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(std::size_t g) { return Word{letter(g)}; }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(long exponent) const;

  /// Exponent sum per generator, sized to cover `generator_count`.
  std::vector<long> exponent_sums(std::size_t generator_count) const;
  /// One past the largest generator index used.
  std::size_t generator_bound() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// x^y = y^-1 x y.
Word conjugate(const Word& x, const Word& y);

/// Descending-order product w[0] w[1] ... of a list of words.
Word product(std::span<const Word> words);

/// Replaces every occurrence of g^±1 by replacement^±1.
Word substitute(const Word& w, std::size_t g, const Word& replacement);
/// Simultaneous substitution; images[g] is the image of generator g.
Word substitute(const Word& w, std::span<const Word> images);

/// Removes inverse pairs across the ends; the result is a conjugate of w.
Word cyclically_reduce(const Word& w);
/// Canonical representative of the cyclic class of w and of w^-1.
Word canonical_cyclic(const Word& w);
/// Length first, then lexicographic with x1 < x1^-1 < x2 < ...
bool shortlex_less(const Word& a, const Word& b);

/// True iff w is a conjugate c^-1 x^±1 c of a single generator.
bool is_generator_conjugate(const Word& w);

struct Relation {
  Word relator;
  std::string origin;
};

/// For a block (g_k, ..., g_j) returns the m-1 relators
///   (g_k ... g_j) (cyclic shift by s)^-1,  s = 1..m-1.
/// Throws WordError for blocks shorter than 2.
std::vector<Relation> cyclic_relators(std::span<const Word> block, const std::string& origin);

/// Generator names; the default is x1..xn.
class GeneratorNames {
 public:
  GeneratorNames() = default;
  explicit GeneratorNames(std::vector<std::string> names) : names_(std::move(names)) {}
  static GeneratorNames standard(std::size_t count);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a name, or size() when unknown.
  std::size_t find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Space separated letters, `^-1` for inverses, runs compressed to `^n`,
/// `1` for the identity. With no names, generator g prints as x(g+1).
std::string to_string(const Word& w, const GeneratorNames* names = nullptr);

/// Parses the textual word syntax: generator names, juxtaposition or
/// whitespace for products, parentheses, `^n` powers, `^g` / `^(w)`
/// conjugation, `1` for the identity. With no names, `x<i>` denotes generator
/// i-1. Throws WordError.
Word parse_word(std::string_view text, const GeneratorNames* names = nullptr);

}  // namespace arrpi

template <>
struct std::hash<arrpi::Word> {
  std::size_t operator()(const arrpi::Word& w) const noexcept;
};
