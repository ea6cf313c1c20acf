#include "arrpi/matching.hpp"

#include "arrpi/errors.hpp"

namespace arrpi {

RewriteOptions default_rewrite_options(std::span<const Word> relators, const Word& word) {
  std::size_t length = word.size();
  for (const Word& r : relators) length += r.size();
  RewriteOptions options;
  options.budget = 1000 + 5 * length * length;
  return options;
}

MatchResult match_word(const Word& raw, const Word& target, std::span<const Word> relators,
                       bool allow_inverse, const RewriteOptions* options) {
  MatchResult out;
  std::vector<Word> candidates{target};
  if (allow_inverse) candidates.push_back(target.inverse());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Word quotient = raw * candidates[c].inverse();
    RewriteOptions opts = options ? *options : default_rewrite_options(relators, quotient);
    auto outcome = prove_trivial(relators, quotient, opts);
    out.expansions += outcome.expansions;
    if (outcome.trivial) {
      out.matched = true;
      out.inverted = c == 1;
      return out;
    }
  }
  return out;
}

std::vector<Word> parse_bracket(std::string_view text, const GeneratorNames* names) {
  std::size_t open = text.find('['), close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw WordError("expected [w1, ..., wm]");
  std::vector<Word> out;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i <= close; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' && depth == 0) || i == close) {
      out.push_back(parse_word(text.substr(start, i - start), names));
      start = i + 1;
    }
  }
  if (out.size() < 2) throw WordError("a bracket needs at least two entries");
  return out;
}

std::vector<Word> bracket_relators(std::span<const Word> entries) {
  std::vector<Word> out;
  for (auto& r : cyclic_relators(entries, {})) out.push_back(r.relator);
  return out;
}

bool match_relator_sets(std::span<const Word> raw, std::span<const Word> target,
                        std::span<const Word> relators, const RewriteOptions* options) {
  if (raw.size() != target.size()) return false;
  std::vector<bool> used(target.size(), false);
  for (const Word& r : raw) {
    bool found = false;
    for (std::size_t t = 0; t < target.size() && !found; ++t) {
      if (used[t]) continue;
      if (match_word(r, target[t], relators, true, options).matched) used[t] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace arrpi
