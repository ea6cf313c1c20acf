#pragma once

// Arrangement files:
//
//   # complete quadrilateral
//   name quadrilateral
//   line 1 -1 0
//   line 1 1 0
//   ...
//   infinity 6
//
// `line a b c` is the line a·z1 + b·z2 + c·z3 = 0 with rational coefficients,
// `infinity i` picks the 1-based line at infinity, `#` starts a comment.

#include <string>
#include <string_view>

#include "arrpi/geometry.hpp"

namespace arrpi {

/// Throws InputError carrying the offending line number.
ArrangementSpec parse_arrangement(std::string_view text);
ArrangementSpec read_arrangement_file(const std::string& path);

/// Inverse of parse_arrangement for normalized specs.
std::string print_arrangement(const ArrangementSpec& spec);

/// `a:b:c` with rational coordinates. Throws InputError.
ProjectivePoint parse_projective_point(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace arrpi
