#include "arrpi/sweep.hpp"

#include <algorithm>

#include "arrpi/errors.hpp"

namespace arrpi {

Word GeometricBase::descending_product() const {
  std::vector<Word> reversed(entries.rbegin(), entries.rend());
  return product(reversed);
}

std::size_t GeometricBase::position_of(std::size_t line) const {
  auto it = std::find(line_of.begin(), line_of.end(), line);
  if (it == line_of.end()) throw SweepError("line " + std::to_string(line + 1) + " not in base");
  return static_cast<std::size_t>(it - line_of.begin());
}

std::vector<Relation> SweepResult::all_relations() const { return relations_before(events.size()); }

std::vector<Relation> SweepResult::relations_before(std::size_t events_done) const {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < events_done && i < events.size(); ++i) {
    const auto& e = events[i];
    if (e.kind != EventKind::Finite) continue;
    auto it = relations.find(e.label);
    if (it != relations.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

std::string point_name(std::size_t label) { return "p" + std::to_string(label); }

GeometricBase initial_base(std::span<const AffineLine> lines, const BasePoint& base) {
  GeometricBase out;
  try {
    out.line_of = fiber_order(lines, base.q, Direction{Rational(0), Rational(1)});
  } catch (const GeometryError& e) {
    throw SweepError(std::string("base point not generic: ") + e.what());
  }
  for (std::size_t i = 0; i < lines.size(); ++i) out.entries.push_back(Word::generator(i));
  return out;
}

FiniteTransition apply_finite_event(const GeometricBase& base, const SweepEvent& event,
                                    const std::string& origin) {
  if (event.kind != EventKind::Finite) throw SweepError("apply_finite_event on an infinity event");
  std::vector<std::size_t> positions;
  for (std::size_t line : event.lines) positions.push_back(base.position_of(line));
  std::sort(positions.begin(), positions.end());
  std::size_t j = positions.front(), k = positions.back();
  if (k - j + 1 != positions.size())
    throw SweepError("lines through " + origin + " are not consecutive in the current base");

  FiniteTransition out{base, {}, j, k};
  Word prefix;  // old[j + t - 1] ... old[j]
  for (std::size_t t = 0; t + j <= k; ++t) {
    out.base.entries[k - t] = conjugate(base.entries[j + t], prefix);
    out.base.line_of[k - t] = base.line_of[j + t];
    prefix = base.entries[j + t] * prefix;
  }
  if (k > j) {
    std::vector<Word> block;
    for (std::size_t p = k + 1; p-- > j;) block.push_back(base.entries[p]);
    out.relations = cyclic_relators(block, origin);
  }
  return out;
}

GeometricBase apply_infinity_event(const GeometricBase& base, const SweepEvent& event) {
  if (event.kind != EventKind::Infinity) throw SweepError("apply_infinity_event on a finite event");
  std::size_t n = base.size();
  std::size_t k = event.lines.size();
  if (k == 0 || k > n) throw SweepError("parallel class size out of range");
  for (std::size_t line : event.lines)
    if (base.position_of(line) < n - k)
      throw SweepError("parallel lines do not occupy the last positions of the base");

  GeometricBase out = base;
  for (std::size_t m = 0; m < n - k; ++m) {
    out.entries[k + m] = base.entries[m];
    out.line_of[k + m] = base.line_of[m];
  }
  std::vector<Word> lower(base.entries.begin(), base.entries.begin() + static_cast<long>(n - k));
  std::reverse(lower.begin(), lower.end());
  Word prefix = product(lower);  // old[n-k-1] ... old[0]
  for (std::size_t t = 0; t < k; ++t) {
    out.entries[k - 1 - t] = conjugate(base.entries[n - k + t], prefix);
    out.line_of[k - 1 - t] = base.line_of[n - k + t];
    prefix = base.entries[n - k + t] * prefix;
  }
  return out;
}

SweepResult run_sweep(const PreparedArrangement& arrangement, const TraceSink& trace) {
  SweepResult result;
  result.bases.push_back(initial_base(arrangement.lines, arrangement.base));
  for (std::size_t i = 0; i < arrangement.events.size(); ++i) {
    const auto& event = arrangement.events[i];
    const GeometricBase& before = result.bases.back();
    EventRecord record;
    record.kind = event.kind;
    record.event_index = i;
    record.base_index = result.bases.size() - 1;
    record.label = event.point ? arrangement.points[*event.point].label : 0;

    GeometricBase after;
    std::vector<Relation> relations;
    if (event.kind == EventKind::Finite) {
      auto transition = apply_finite_event(before, event, point_name(record.label));
      record.first = transition.first;
      record.last = transition.last;
      after = std::move(transition.base);
      relations = std::move(transition.relations);
      result.relations[record.label] = relations;
    } else {
      record.parallel = event.lines.size();
      after = apply_infinity_event(before, event);
    }
    result.bases.push_back(std::move(after));
    result.events.push_back(record);
    if (record.label != 0) result.context[record.label] = record;
    if (trace)
      trace(TraceEntry{result.events.back(), result.bases[result.bases.size() - 2],
                       result.bases.back(), relations});
  }
  return result;
}

}  // namespace arrpi
