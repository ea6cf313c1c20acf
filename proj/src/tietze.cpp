#include "arrpi/tietze.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_set>

namespace arrpi {

namespace {

std::size_t occurrences(const Word& w, std::size_t g) {
  std::size_t n = 0;
  for (Letter l : w.letters())
    if (generator_of(l) == g) ++n;
  return n;
}

class Simplifier {
 public:
  Simplifier(const Presentation& p, std::size_t budget, TietzeLog* log, const RewriteOptions& rewrite)
      : names_(p.names.names()), rels_(p.relators), budget_(budget), log_(log), rewrite_(rewrite) {}

  Presentation run() {
    while (!out_of_budget()) {
      normalize();
      if (out_of_budget()) break;
      if (eliminate_short(1) || eliminate_short(2) || rewrite_relators(true, true) ||
          eliminate_once() || rewrite_relators(true, false))
        continue;
      break;
    }
    while (!out_of_budget() && rewrite_relators(false, false)) {
    }
    Presentation out;
    out.names = GeneratorNames(names_);
    for (auto& r : rels_) {
      Word c = canonical_cyclic(r.relator);
      if (!c.empty()) out.relators.push_back(Relation{std::move(c), r.origin});
    }
    if (log_) {
      log_->spent = spent_;
      log_->exhausted = out_of_budget();
    }
    return out;
  }

 private:
  bool out_of_budget() const { return spent_ >= budget_; }
  void note(std::string step) {
    ++spent_;
    if (log_) log_->steps.push_back(std::move(step));
  }
  std::string show(const Word& w) const {
    GeneratorNames names(names_);
    return to_string(w, &names);
  }

  void normalize() {
    std::unordered_set<Word> seen;
    std::vector<Relation> kept;
    for (auto& r : rels_) {
      Word w = cyclically_reduce(r.relator);
      if (w.empty()) {
        note("drop trivial relator from " + r.origin);
        continue;
      }
      if (!seen.insert(canonical_cyclic(w)).second) {
        note("drop duplicate relator " + show(w));
        continue;
      }
      kept.push_back(Relation{std::move(w), r.origin});
    }
    rels_ = std::move(kept);
  }

  // Relator i, rotated to start with g^e, reads g^e C; then g = C^-e.
  Word image_of(std::size_t i, std::size_t g) const {
    auto s = rels_[i].relator.letters();
    std::size_t n = s.size();
    std::size_t at = 0;
    while (generator_of(s[at]) != g) ++at;
    std::vector<Letter> rest;
    for (std::size_t t = 1; t < n; ++t) rest.push_back(s[(at + t) % n]);
    Word c(rest);
    return s[at] > 0 ? c.inverse() : c;
  }

  std::size_t cost_after(std::size_t i, std::size_t g, const Word& image) const {
    std::size_t total = 0;
    for (std::size_t j = 0; j < rels_.size(); ++j)
      if (j != i) total += cyclically_reduce(substitute(rels_[j].relator, g, image)).size();
    return total;
  }

  void eliminate(std::size_t i, std::size_t g) {
    Word image = image_of(i, g);
    note("eliminate " + names_[g] + " = " + show(image) + " using relator from " + rels_[i].origin);
    std::vector<Word> images;
    for (std::size_t h = 0; h < names_.size(); ++h)
      images.push_back(h == g ? Word() : Word::generator(h < g ? h : h - 1));
    images[g] = substitute(image, images);
    std::vector<Relation> next;
    for (std::size_t j = 0; j < rels_.size(); ++j) {
      if (j == i) continue;
      next.push_back(Relation{substitute(rels_[j].relator, images), rels_[j].origin});
    }
    rels_ = std::move(next);
    names_.erase(names_.begin() + static_cast<long>(g));
  }

  struct Choice {
    std::size_t inverses, cost, relator, generator;
    bool better_than(const Choice& o) const {
      if (inverses != o.inverses) return inverses < o.inverses;
      if (cost != o.cost) return cost < o.cost;
      return generator > o.generator;
    }
  };

  std::optional<Choice> best_choice(std::size_t max_length) const {
    std::optional<Choice> best;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      const Word& r = rels_[i].relator;
      if (r.size() > max_length) continue;
      for (std::size_t g = 0; g < names_.size(); ++g) {
        if (occurrences(r, g) != 1) continue;
        Word image = image_of(i, g);
        std::size_t inverses = static_cast<std::size_t>(
            std::count_if(image.letters().begin(), image.letters().end(), [](Letter l) { return l < 0; }));
        Choice c{inverses, cost_after(i, g, image), i, g};
        if (!best || c.better_than(*best)) best = c;
      }
    }
    return best;
  }

  bool eliminate_short(std::size_t length) {
    auto choice = best_choice(length);
    if (!choice) return false;
    eliminate(choice->relator, choice->generator);
    return true;
  }

  bool eliminate_once() {
    auto choice = best_choice(std::numeric_limits<std::size_t>::max());
    if (!choice) return false;
    eliminate(choice->relator, choice->generator);
    return true;
  }

  // strict: only length-reducing rewrites, otherwise shortlex-reducing.
  // earlier: relator i is rewritten by relators 0..i-1 only.
  bool rewrite_relators(bool strict, bool earlier) {
    for (std::size_t i = 0; i < rels_.size() && !out_of_budget(); ++i) {
      std::vector<Word> others;
      for (std::size_t j = 0; j < (earlier ? i : rels_.size()); ++j)
        if (j != i) others.push_back(rels_[j].relator);
      if (others.empty()) continue;
      RewriteSystem system(others, rewrite_.growth);
      Word current = canonical_cyclic(rels_[i].relator);
      std::size_t allowance = std::min(budget_ - spent_, rewrite_.budget);
      auto outcome = system.reduce(current, allowance, rewrite_.slack);
      spent_ += outcome.expansions;
      if (outcome.trivial) {
        note("delete relator " + show(current) + " from " + rels_[i].origin + ", a consequence of the others");
        rels_.erase(rels_.begin() + static_cast<long>(i));
        return true;
      }
      bool better = strict ? outcome.best.size() < current.size() : shortlex_less(outcome.best, current);
      if (better) {
        note("rewrite " + show(current) + " to " + show(outcome.best));
        rels_[i].relator = outcome.best;
        return true;
      }
    }
    return false;
  }

  std::vector<std::string> names_;
  std::vector<Relation> rels_;
  std::size_t budget_;
  std::size_t spent_ = 0;
  TietzeLog* log_;
  RewriteOptions rewrite_;
};

}  // namespace

std::size_t default_budget(const Presentation& p) {
  std::size_t length = p.total_length();
  return 2000 + 50 * length * length;
}

Presentation tietze_simplify(const Presentation& p, std::size_t budget, TietzeLog* log,
                             const RewriteOptions& rewrite) {
  if (budget == 0) return p;
  return Simplifier(p, budget, log, rewrite).run();
}

}  // namespace arrpi
