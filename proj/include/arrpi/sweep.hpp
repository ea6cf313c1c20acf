#pragma once

// Rotation of the vertical fiber through the base point across all events of
// the schedule. The geometric base is tracked as raw words in the generators
// of the initial base; no relation is ever used to simplify.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrpi/geometry.hpp"
#include "arrpi/word.hpp"

namespace arrpi {

struct GeometricBase {
  std::vector<Word> entries;        // position 0 is the lowest intersection
  std::vector<std::size_t> line_of; // position -> affine line index

  std::size_t size() const { return entries.size(); }
  /// entries[n-1] ... entries[0], the boundary loop of the fiber.
  Word descending_product() const;
  /// Position of a line in this base. Throws SweepError if absent.
  std::size_t position_of(std::size_t line) const;
};

/// Bookkeeping for one event: the base it acted on and where.
struct EventRecord {
  EventKind kind = EventKind::Finite;
  std::size_t event_index = 0;
  std::size_t base_index = 0;   // index in SweepResult::bases of the pre-event base
  std::size_t label = 0;        // singular point label, 0 when the event has none
  std::size_t first = 0;        // finite: 0-based block [first, last]
  std::size_t last = 0;
  std::size_t parallel = 0;     // infinity: size k of the slope class
};

struct SweepResult {
  std::vector<GeometricBase> bases;                    // bases[0] is the initial base
  std::map<std::size_t, std::vector<Relation>> relations;  // by finite point label
  std::vector<EventRecord> events;                     // in sweep order
  std::map<std::size_t, EventRecord> context;          // by point label

  std::size_t generator_count() const { return bases.empty() ? 0 : bases.front().size(); }
  /// All relators in sweep order.
  std::vector<Relation> all_relations() const;
  /// Relators emitted by the first `events_done` events.
  std::vector<Relation> relations_before(std::size_t events_done) const;
};

/// Entries x1..xn, line_of the bottom-to-top order along the vertical fiber.
/// Throws SweepError if two lines cross that fiber at the same height.
GeometricBase initial_base(std::span<const AffineLine> lines, const BasePoint& base);

struct FiniteTransition {
  GeometricBase base;
  std::vector<Relation> relations;
  std::size_t first = 0, last = 0;
};

/// Finite transition: the block [j, k] of lines through the point is reversed,
///   new[k - t] = old[j + t]^(old[j + t - 1] ... old[j]),
/// and the cyclic relator family of (old[k], ..., old[j]) is emitted.
FiniteTransition apply_finite_event(const GeometricBase& base, const SweepEvent& event,
                                    const std::string& origin);

/// Infinity transition for k parallel lines occupying the last k positions:
///   new[k + m] = old[m],  new[k-1-t] = old[n-k+t]^(old[n-k+t-1] ... old[0]).
GeometricBase apply_infinity_event(const GeometricBase& base, const SweepEvent& event);

struct TraceEntry {
  const EventRecord& record;
  const GeometricBase& before;
  const GeometricBase& after;
  std::span<const Relation> relations;
};
using TraceSink = std::function<void(const TraceEntry&)>;

SweepResult run_sweep(const PreparedArrangement& arrangement, const TraceSink& trace = {});

/// "p<label>".
std::string point_name(std::size_t label);

}  // namespace arrpi
