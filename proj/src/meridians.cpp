#include "arrpi/meridians.hpp"

#include "arrpi/errors.hpp"

namespace arrpi {

namespace {

const EventRecord& record_for(const SweepResult& result, std::size_t label) {
  auto it = result.context.find(label);
  if (it == result.context.end())
    throw SweepError("no sweep event for " + point_name(label));
  return it->second;
}

// entries[last] ... entries[first]
Word descending(const GeometricBase& base, std::size_t first, std::size_t end) {
  Word out;
  for (std::size_t p = first; p < end; ++p) out = base.entries[p] * out;
  return out;
}

}  // namespace

Word infinity_line_meridian(const GeometricBase& base) {
  return base.descending_product().inverse();
}

Word finite_point_meridian(const SweepResult& result, std::size_t label) {
  const auto& rec = record_for(result, label);
  if (rec.kind != EventKind::Finite)
    throw SweepError(point_name(label) + " lies on the line at infinity");
  return descending(result.bases[rec.base_index], rec.first, rec.last + 1);
}

InfinityPointMeridian infinite_point_meridian(const SweepResult& result, std::size_t label) {
  const auto& rec = record_for(result, label);
  if (rec.kind != EventKind::Infinity) throw SweepError(point_name(label) + " is a finite point");
  const auto& base = result.bases[rec.base_index];
  std::size_t n = base.size();
  std::size_t k = rec.parallel;
  InfinityPointMeridian out;
  out.word = descending(base, 0, n - k).inverse();
  out.product_form = infinity_line_meridian(base) * descending(base, n - k, n);
  out.full_pencil = k == n;
  return out;
}

MeridianTable full_meridian_table(const SweepResult& result) {
  MeridianTable table;
  std::size_t n = result.generator_count();
  for (std::size_t i = 0; i < n; ++i) table.line_meridians.push_back(Word::generator(i));
  table.line_meridians.push_back(result.bases.empty() ? Word()
                                                      : infinity_line_meridian(result.bases.front()));
  for (const auto& [label, rec] : result.context) {
    if (table.point_meridians.size() < label) table.point_meridians.resize(label);
    table.point_meridians[label - 1] = rec.kind == EventKind::Finite
                                           ? finite_point_meridian(result, label)
                                           : infinite_point_meridian(result, label).word;
  }
  return table;
}

}  // namespace arrpi
