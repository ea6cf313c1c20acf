#pragma once

// Presentation exports. Byte-exact formats are described in docs/formats.md.

#include <string>
#include <string_view>

#include "arrpi/analysis.hpp"
#include "arrpi/presentation.hpp"

namespace arrpi {

enum class Format { Text, Json, Gap };

/// `text`, `json` or `gap`. Throws InputError.
Format parse_format(std::string_view name);

/// `< x2, x3 | x2^2, x2 x3 x2 x3 >`.
std::string compact(const Presentation& p);

std::string to_text(const Presentation& p);
std::string to_json(const Presentation& p);
std::string to_gap(const Presentation& p);
std::string render(const Presentation& p, Format format);

/// Reads the text or JSON form back, picking by the first character.
/// Throws InputError.
Presentation parse_presentation(std::string_view text);

/// Symbolic weights print as `power <origin> <weight> <word>` lines; GAP
/// output needs concrete weights and throws PresentationError otherwise.
std::string render(const OrbifoldPresentation& p, Format format);

/// Meridians of every line and singular point. GAP output is rejected.
std::string render_meridians(const Analysis& a, Format format);

}  // namespace arrpi
