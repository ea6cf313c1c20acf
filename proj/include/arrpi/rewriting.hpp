#pragma once

// Budgeted search for short representatives of cyclic words modulo a finite
// set of relators. Word problems in these groups are undecidable in general,
// so every answer here is one-sided: `trivial == true` is a proof, a negative
// answer only means the budget ran out.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "arrpi/word.hpp"

namespace arrpi {

struct RewriteOptions {
  std::size_t budget = 20000;  // node expansions
  std::size_t growth = 2;      // a rule may lengthen a word by this much
  std::size_t slack = 4;       // words longer than start + slack are pruned
};

struct RewriteOutcome {
  bool trivial = false;
  Word best;  // least cyclic word found, in canonical_cyclic form
  std::size_t expansions = 0;
};

class RewriteSystem {
 public:
  /// Rules u -> v^-1 for every factorization u v of a cyclic rotation of
  /// r or r^-1 with |v| <= |u| + growth.
  RewriteSystem(std::span<const Word> relators, std::size_t growth);

  std::size_t rule_count() const { return rules_.size(); }

  /// Best-first search over the cyclic class of w (and of w^-1). Stops early
  /// when the empty word is reached, or when `stop_below` is given and a word
  /// shortlex-smaller than it is found.
  RewriteOutcome reduce(const Word& w, std::size_t budget, std::size_t slack,
                        const Word* stop_below = nullptr) const;

 private:
  struct Rule {
    std::vector<Letter> lhs;
    Word rhs;
  };
  std::vector<Rule> rules_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_;
  std::vector<std::size_t> lengths_;
};

/// True when u v^-1 is shown trivial within the budget.
bool proves_equal(std::span<const Word> relators, const Word& u, const Word& v,
                  const RewriteOptions& options = {});
RewriteOutcome prove_trivial(std::span<const Word> relators, const Word& w,
                             const RewriteOptions& options = {});

}  // namespace arrpi
