#include "arrpi/lac.hpp"

#include <algorithm>

#include "arrpi/errors.hpp"
#include "arrpi/io.hpp"

namespace arrpi {

namespace {

struct Working {
  std::vector<ProjectiveLine> lines;
  std::vector<bool> line_kept;  // in I
  std::size_t infinity = 0;
  std::vector<ProjectivePoint> points;
  std::vector<bool> point_kept;

  explicit Working(const LacDatum& d)
      : lines(d.arrangement.lines), infinity(d.arrangement.infinity_index), points(d.points) {
    std::size_t k = lines.size();
    for (std::size_t i = 0; i < k; ++i) line_kept.push_back(d.index.count(i) > 0);
    for (std::size_t j = 0; j < points.size(); ++j) point_kept.push_back(d.index.count(k + j) > 0);
  }

  std::size_t incidence(const ProjectivePoint& p) const {
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [&](const auto& l) { return incident(l, p); }));
  }

  void erase_line(std::size_t i) {
    lines.erase(lines.begin() + static_cast<long>(i));
    line_kept.erase(line_kept.begin() + static_cast<long>(i));
    if (infinity == i)
      infinity = 0;
    else if (infinity > i)
      --infinity;
  }

  void erase_point(std::size_t j) {
    points.erase(points.begin() + static_cast<long>(j));
    point_kept.erase(point_kept.begin() + static_cast<long>(j));
  }

  LacDatum datum(const std::string& name) const {
    LacDatum d;
    d.arrangement.lines = lines;
    d.arrangement.infinity_index = lines.empty() ? 0 : infinity;
    d.arrangement.name = name;
    d.points = points;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (line_kept[i]) d.index.insert(i);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (point_kept[j]) d.index.insert(lines.size() + j);
    return d;
  }
};

std::string line_name(const ProjectiveLine& l) {
  return "[" + to_string(l.coeffs[0]) + ":" + to_string(l.coeffs[1]) + ":" + to_string(l.coeffs[2]) + "]";
}

}  // namespace

void LacDatum::validate() const {
  std::size_t total = line_count() + points.size();
  for (std::size_t i : index)
    if (i >= total) throw PresentationError("LAC index " + std::to_string(i + 1) + " out of range");
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (normalize_point(points[a].coords) == normalize_point(points[b].coords))
        throw PresentationError("points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                " of S coincide");
}

bool LacDatum::reduced() const {
  std::size_t k = line_count();
  for (std::size_t i = 0; i < k; ++i)
    if (index.count(i)) return false;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (!index.count(k + j)) return false;
    std::size_t on = 0;
    for (const auto& l : arrangement.lines)
      if (incident(l, points[j])) ++on;
    if (on < 2) return false;
  }
  return true;
}

LacDatum lac_reduce(const LacDatum& datum, std::vector<LacStep>* log) {
  datum.validate();
  Working w(datum);
  auto note = [&](std::string rule, std::string detail) {
    if (log) log->push_back(LacStep{std::move(rule), std::move(detail)});
  };
  for (;;) {
    auto kept_line = std::find(w.line_kept.begin(), w.line_kept.end(), true);
    if (kept_line != w.line_kept.end()) {
      auto i = static_cast<std::size_t>(kept_line - w.line_kept.begin());
      note("indexed-line", "delete line " + line_name(w.lines[i]));
      w.erase_line(i);
      continue;
    }
    bool applied = false;
    for (std::size_t j = 0; j < w.points.size(); ++j)
      if (w.incidence(w.points[j]) == 0) {
        note("stray-point", "drop point " + to_string(w.points[j]) + " lying on no line");
        w.erase_point(j);
        applied = true;
        break;
      }
    if (applied) continue;
    for (std::size_t j = 0; j < w.points.size(); ++j)
      if (!w.point_kept[j]) {
        note("unindexed-point", "drop point " + to_string(w.points[j]) + " whose divisor is removed");
        w.erase_point(j);
        applied = true;
        break;
      }
    if (applied) continue;
    for (std::size_t j = 0; j < w.points.size(); ++j)
      if (w.incidence(w.points[j]) == 1) {
        std::size_t i = 0;
        while (!incident(w.lines[i], w.points[j])) ++i;
        note("smooth-point", "delete line " + line_name(w.lines[i]) + " through the smooth point " +
                          to_string(w.points[j]));
        w.erase_line(i);
        w.erase_point(j);
        applied = true;
        break;
      }
    if (!applied) break;
  }
  return w.datum(datum.arrangement.name);
}

Presentation lac_presentation(const Analysis& analysis, const LacDatum& reduced) {
  if (!reduced.reduced()) throw PresentationError("LAC datum is not reduced; call lac_reduce first");
  Presentation out = analysis.complement();
  const auto& coords = analysis.arrangement.point_coordinates;
  for (const auto& p : reduced.points) {
    ProjectivePoint target = normalize_point(p.coords);
    auto it = std::find(coords.begin(), coords.end(), target);
    if (it == coords.end())
      throw PresentationError("point " + to_string(target) + " is not a singular point of the arrangement");
    std::size_t label = analysis.arrangement.points[static_cast<std::size_t>(it - coords.begin())].label;
    const Word& meridian = analysis.meridians.point_meridians[label - 1];
    if (!meridian.empty()) out.relators.push_back(Relation{meridian, "E" + std::to_string(label)});
  }
  return out;
}

LacGroup lac_group(const LacDatum& datum) {
  LacGroup out;
  out.reduced = lac_reduce(datum, &out.steps);
  if (out.reduced.arrangement.lines.empty()) return out;
  out.presentation = lac_presentation(analyze(out.reduced.arrangement), out.reduced);
  return out;
}

std::size_t parse_lac_index(const std::string& token, std::size_t line_count) {
  try {
    std::size_t used = 0;
    if (!token.empty() && (token[0] == 'L' || token[0] == 'S')) {
      auto n = std::stoul(token.substr(1), &used);
      if (used + 1 != token.size() || n == 0) throw InputError("bad LAC index '" + token + "'");
      return token[0] == 'L' ? n - 1 : line_count + n - 1;
    }
    auto n = std::stoul(token, &used);
    if (used != token.size() || n == 0) throw InputError("bad LAC index '" + token + "'");
    return n - 1;
  } catch (const std::logic_error&) {
    throw InputError("bad LAC index '" + token + "'");
  }
}

LacDatum lac_datum(const Analysis& analysis, const std::vector<std::string>& points,
                   const std::vector<std::string>& index) {
  LacDatum d;
  d.arrangement = analysis.arrangement.spec;
  const auto& coords = analysis.arrangement.point_coordinates;
  for (const auto& token : points) {
    if (token.empty() || token[0] != 'p') {
      d.points.push_back(parse_projective_point(token));
      continue;
    }
    std::size_t used = 0;
    unsigned long label = 0;
    try {
      label = std::stoul(token.substr(1), &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used + 1 != token.size() || label == 0 || label > coords.size())
      throw InputError("no singular point '" + token + "'");
    d.points.push_back(coords[label - 1]);
  }
  std::size_t k = d.line_count();
  if (index.empty() || (index.size() == 1 && index[0] == "points")) {
    for (std::size_t j = 0; j < d.points.size(); ++j) d.index.insert(k + j);
  } else if (index.size() == 1 && index[0] == "all") {
    for (std::size_t i = 0; i < k + d.points.size(); ++i) d.index.insert(i);
  } else {
    for (const auto& token : index) d.index.insert(parse_lac_index(token, k));
  }
  return d;
}

}  // namespace arrpi
