#pragma once

#include <string>

#include "arrpi/geometry.hpp"

namespace arrpi {

/// Static figure of the sheared affine chart: the affine lines, the finite
/// singular points, the base point and one dashed pencil line per event.
/// The frame stands for the line at infinity. Throws GeometryError for an
/// empty arrangement.
std::string render_svg(const PreparedArrangement& arrangement);

}  // namespace arrpi
