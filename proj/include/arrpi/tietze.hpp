#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrpi/presentation.hpp"
#include "arrpi/rewriting.hpp"

namespace arrpi {

/// Polynomial step cap in the total relator length L: 2000 + 50·L².
std::size_t default_budget(const Presentation& p);

struct TietzeLog {
  std::vector<std::string> steps;
  std::size_t spent = 0;
  bool exhausted = false;
};

/// Greedy deterministic Tietze simplification. Until the budget runs out or
/// nothing changes:
///   - relators are cyclically reduced, empties and cyclic duplicates dropped;
///   - a generator is eliminated through a length-1 or length-2 relator, or
///     through any relator in which it occurs exactly once (the choice that
///     leaves the least total length wins, ties to the higher generator);
///   - each relator is rewritten cyclically by the others toward a
///     shortlex-smaller word, and deleted when shown trivial.
/// Moves and rewrite expansions both count against the budget; `rewrite.budget`
/// caps the expansions of a single relator rewrite. A budget of 0 returns the
/// input unchanged.
Presentation tietze_simplify(const Presentation& p, std::size_t budget, TietzeLog* log = nullptr,
                             const RewriteOptions& rewrite = {2000, 2, 4});

}  // namespace arrpi
