#pragma once

// Comparison of raw sweep output with hand-simplified tables: a raw word
// matches a table word when their quotient is shown trivial by budgeted
// rewriting with the relators available at that stage.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "arrpi/rewriting.hpp"
#include "arrpi/word.hpp"

namespace arrpi {

/// 1000 + 5·L² expansions, L the total length of relators and word.
RewriteOptions default_rewrite_options(std::span<const Word> relators, const Word& word);

struct MatchResult {
  bool matched = false;
  bool inverted = false;  // matched target^-1 instead of target
  std::size_t expansions = 0;
};

/// raw ≡ target (or target^-1 when allowed) modulo `relators`. With no
/// options the default budget is used.
MatchResult match_word(const Word& raw, const Word& target, std::span<const Word> relators,
                       bool allow_inverse = false, const RewriteOptions* options = nullptr);

/// Parses `[w1, w2, ..., wm]` into its entries. Throws WordError.
std::vector<Word> parse_bracket(std::string_view text, const GeneratorNames* names = nullptr);
/// The m-1 relators of the cyclic family [w1, ..., wm].
std::vector<Word> bracket_relators(std::span<const Word> entries);

/// True when raw and target relator lists pair up bijectively, each pair
/// equal (up to inversion) modulo `relators`.
bool match_relator_sets(std::span<const Word> raw, std::span<const Word> target,
                        std::span<const Word> relators, const RewriteOptions* options = nullptr);

}  // namespace arrpi
