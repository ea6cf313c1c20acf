#include "arrpi/rewriting.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace arrpi {

namespace {

constexpr std::uint64_t kBase = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(Letter l) { return static_cast<std::uint64_t>(static_cast<std::int64_t>(l) + 0x1000); }

std::uint64_t hash_letters(std::span<const Letter> s) {
  std::uint64_t h = 0;
  for (Letter l : s) h = h * kBase + mix(l);
  return h;
}

std::uint64_t keyed(std::uint64_t h, std::size_t length) { return h ^ (length * 0xC2B2AE3D27D4EB4Full); }

struct Node {
  Word word;
  bool operator<(const Node& other) const { return shortlex_less(other.word, word); }
};

}  // namespace

RewriteSystem::RewriteSystem(std::span<const Word> relators, std::size_t growth) {
  std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> seen;
  for (const Word& raw : relators) {
    Word r = cyclically_reduce(raw);
    if (r.empty()) continue;
    for (const Word& form : {r, r.inverse()}) {
      auto s = form.letters();
      std::size_t n = s.size();
      for (std::size_t rot = 0; rot < n; ++rot) {
        std::vector<Letter> rotated;
        for (std::size_t i = 0; i < n; ++i) rotated.push_back(s[(rot + i) % n]);
        for (std::size_t cut = 1; cut <= n; ++cut) {
          if (n - cut > cut + growth) continue;
          std::vector<Letter> lhs(rotated.begin(), rotated.begin() + static_cast<long>(cut));
          Word rhs = Word(std::span<const Letter>(rotated).subspan(cut)).inverse();
          std::vector<Letter> rl(rhs.letters().begin(), rhs.letters().end());
          if (!seen.insert({lhs, rl}).second) continue;
          index_[keyed(hash_letters(lhs), lhs.size())].push_back(rules_.size());
          if (std::find(lengths_.begin(), lengths_.end(), lhs.size()) == lengths_.end())
            lengths_.push_back(lhs.size());
          rules_.push_back(Rule{std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  std::sort(lengths_.begin(), lengths_.end());
}

RewriteOutcome RewriteSystem::reduce(const Word& w, std::size_t budget, std::size_t slack,
                                     const Word* stop_below) const {
  RewriteOutcome out;
  Word start = canonical_cyclic(w);
  out.best = start;
  if (start.empty()) {
    out.trivial = true;
    return out;
  }
  std::size_t cap = start.size() + slack;
  std::priority_queue<Node> open;
  std::unordered_set<Word> visited;
  open.push(Node{start});
  visited.insert(start);

  std::vector<Letter> doubled;
  std::vector<std::uint64_t> prefix, powers{1};
  std::vector<Letter> next;
  while (!open.empty() && out.expansions < budget) {
    Word current = open.top().word;
    open.pop();
    ++out.expansions;
    auto s = current.letters();
    std::size_t n = s.size();
    doubled.assign(s.begin(), s.end());
    doubled.insert(doubled.end(), s.begin(), s.end());
    prefix.assign(2 * n + 1, 0);
    for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] * kBase + mix(doubled[i]);
    while (powers.size() <= n) powers.push_back(powers.back() * kBase);

    for (std::size_t len : lengths_) {
      if (len > n) break;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t h = prefix[i + len] - prefix[i] * powers[len];
        auto it = index_.find(keyed(h, len));
        if (it == index_.end()) continue;
        for (std::size_t id : it->second) {
          const Rule& rule = rules_[id];
          if (!std::equal(rule.lhs.begin(), rule.lhs.end(), doubled.begin() + static_cast<long>(i)))
            continue;
          next.assign(doubled.begin() + static_cast<long>(i + len),
                      doubled.begin() + static_cast<long>(i + n));
          next.insert(next.end(), rule.rhs.letters().begin(), rule.rhs.letters().end());
          Word candidate = canonical_cyclic(Word(next));
          if (candidate.size() > cap) continue;
          if (!visited.insert(candidate).second) continue;
          if (shortlex_less(candidate, out.best)) out.best = candidate;
          if (candidate.empty()) {
            out.trivial = true;
            return out;
          }
          if (stop_below && shortlex_less(candidate, *stop_below)) return out;
          open.push(Node{std::move(candidate)});
        }
      }
    }
  }
  return out;
}

RewriteOutcome prove_trivial(std::span<const Word> relators, const Word& w,
                             const RewriteOptions& options) {
  Word reduced = cyclically_reduce(w);
  if (reduced.empty()) return RewriteOutcome{true, {}, 0};
  RewriteSystem system(relators, options.growth);
  return system.reduce(reduced, options.budget, options.slack);
}

bool proves_equal(std::span<const Word> relators, const Word& u, const Word& v,
                  const RewriteOptions& options) {
  return prove_trivial(relators, u * v.inverse(), options).trivial;
}

}  // namespace arrpi
