#pragma once

// Line arrangement complements of blow-ups: a datum (A, S, I) with A a real
// projective arrangement, S points of P^2 to blow up and I the indices of the
// divisors kept in the surface. Indices run over the lines of A (0..k-1) and
// then over S (k..k+s-1).

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "arrpi/analysis.hpp"
#include "arrpi/geometry.hpp"
#include "arrpi/presentation.hpp"

namespace arrpi {

struct LacDatum {
  ArrangementSpec arrangement;  // may be empty after reduction
  std::vector<ProjectivePoint> points;
  std::set<std::size_t> index;

  std::size_t line_count() const { return arrangement.lines.size(); }
  /// Throws PresentationError on repeated points or indices out of range.
  void validate() const;
  /// S ⊆ Sing A and I = S.
  bool reduced() const;
};

struct LacStep {
  std::string rule;  // "indexed-line", "stray-point", "unindexed-point", "smooth-point"
  std::string detail;
};

/// Applies the indexed-line, stray-point, unindexed-point and smooth-point
/// rules in that order until none applies. When the line at infinity is
/// deleted the first remaining line takes its place.
LacDatum lac_reduce(const LacDatum& datum, std::vector<LacStep>* log = nullptr);

/// Complement presentation of `analysis` plus gamma_p for every point of the
/// reduced datum. Throws PresentationError when the datum is not reduced or
/// does not belong to the analysed arrangement.
Presentation lac_presentation(const Analysis& analysis, const LacDatum& reduced);

struct LacGroup {
  LacDatum reduced;
  std::vector<LacStep> steps;
  Presentation presentation;  // no generators when every line was deleted
};

LacGroup lac_group(const LacDatum& datum);

/// Parses an index token: a 1-based combined index, `L<i>` or `S<j>`.
std::size_t parse_lac_index(const std::string& token, std::size_t line_count);

/// Datum over the analysed arrangement from text tokens: points as `p<label>`
/// (sweep ordinal) or `a:b:c`; the index as `points` (all of S, also when
/// empty), `all`, or parse_lac_index tokens. Throws InputError.
LacDatum lac_datum(const Analysis& analysis, const std::vector<std::string>& points,
                   const std::vector<std::string>& index);

}  // namespace arrpi
