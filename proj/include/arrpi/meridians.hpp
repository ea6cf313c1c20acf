#pragma once

#include <cstddef>
#include <vector>

#include "arrpi/geometry.hpp"
#include "arrpi/sweep.hpp"
#include "arrpi/word.hpp"

namespace arrpi {

/// (entries[n-1] ... entries[0])^-1, the meridian of the line at infinity.
Word infinity_line_meridian(const GeometricBase& base);

/// Descending product of the block of the pre-event base at a finite point.
/// Throws SweepError when `label` is not a finite point of the sweep.
Word finite_point_meridian(const SweepResult& result, std::size_t label);

struct InfinityPointMeridian {
  Word word;               // (entries[n-k-1] ... entries[0])^-1
  Word product_form;       // gamma_inf · entries[n-1] ... entries[n-k]
  bool full_pencil = false;  // every affine line passes through the point
};

/// Meridian of a singular point on the line at infinity, computed from the
/// complementary lines of the pre-event base; `product_form` is the same loop
/// written through the meridian of the line at infinity and the parallel block.
InfinityPointMeridian infinite_point_meridian(const SweepResult& result, std::size_t label);

struct MeridianTable {
  std::vector<Word> line_meridians;   // canonical affine lines, then L_inf last
  std::vector<Word> point_meridians;  // by label - 1
};

MeridianTable full_meridian_table(const SweepResult& result);

}  // namespace arrpi
