#include "arrpi/export.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "arrpi/errors.hpp"

namespace arrpi {

using Json = nlohmann::ordered_json;

namespace {

Json letters_json(const Word& w) {
  Json out = Json::array();
  for (Letter l : w.letters()) out.push_back(l);
  return out;
}

Json generators_json(const Presentation& p) {
  Json out = Json::array();
  for (const auto& n : p.names.names()) out.push_back(n);
  return out;
}

Json relators_json(const Presentation& p) {
  Json out = Json::array();
  for (const auto& r : p.relators)
    out.push_back(Json{{"origin", r.origin},
                       {"word", letters_json(r.relator)},
                       {"text", to_string(r.relator, &p.names)}});
  return out;
}

std::string origin_token(const std::string& origin) { return origin.empty() ? "-" : origin; }

std::string gap_word(const Word& w) {
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t run = 1;
    while (i + run < letters.size() && letters[i + run] == letters[i]) ++run;
    if (!out.empty()) out += '*';
    out += "F." + std::to_string(generator_of(letters[i]) + 1);
    long exponent = static_cast<long>(run) * (letters[i] > 0 ? 1 : -1);
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i += run;
  }
  return out;
}

Word word_from_json(const Json& j, std::size_t generators) {
  if (!j.is_array()) throw InputError("relator word must be an array of signed generator numbers");
  std::vector<Letter> letters;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("relator letters must be integers");
    auto l = v.get<long long>();
    if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > generators)
      throw InputError("relator letter " + std::to_string(l) + " out of range");
    letters.push_back(static_cast<Letter>(l));
  }
  return Word(letters);
}

Presentation parse_json_presentation(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    throw InputError("JSON presentation needs 'generators' and 'relators'");
  std::vector<std::string> names;
  for (const auto& n : j["generators"]) {
    if (!n.is_string()) throw InputError("generator names must be strings");
    names.push_back(n.get<std::string>());
  }
  Presentation p;
  p.names = GeneratorNames(std::move(names));
  for (const auto& r : j["relators"]) {
    if (!r.is_object() || !r.contains("word")) throw InputError("each relator needs a 'word'");
    std::string origin = r.contains("origin") && r["origin"].is_string() ? r["origin"].get<std::string>() : "";
    p.relators.push_back(Relation{word_from_json(r["word"], p.generator_count()), origin});
  }
  return p;
}

Presentation parse_text_presentation(std::string_view text) {
  Presentation p;
  bool have_generators = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    if (key == "generators") {
      if (have_generators) throw InputError("generators declared twice", number);
      std::vector<std::string> names;
      std::string n;
      while (fields >> n) names.push_back(n);
      p.names = GeneratorNames(std::move(names));
      have_generators = true;
    } else if (key == "relator") {
      if (!have_generators) throw InputError("relator before 'generators'", number);
      std::string origin;
      if (!(fields >> origin)) throw InputError("expected 'relator <origin> <word>'", number);
      std::string rest;
      std::getline(fields, rest);
      try {
        p.relators.push_back(Relation{parse_word(rest, &p.names), origin == "-" ? "" : origin});
      } catch (const WordError& e) {
        throw InputError(e.what(), number);
      }
    } else {
      throw InputError("unknown record '" + key + "'", number);
    }
  }
  if (!have_generators) throw InputError("missing 'generators' line");
  return p;
}

Json weight_json(const Weight& w) {
  if (w.is_finite()) return w.value();
  return w.to_string();
}

std::string line_name(std::size_t i) { return "L" + std::to_string(i + 1); }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "gap") return Format::Gap;
  throw InputError("unknown format '" + std::string(name) + "' (text, json, gap)");
}

std::string compact(const Presentation& p) {
  std::string out = "<";
  for (std::size_t g = 0; g < p.generator_count(); ++g) out += (g ? ", " : " ") + p.names[g];
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out += (i ? ", " : " ") + to_string(p.relators[i].relator, &p.names);
  return out + " >";
}

std::string to_text(const Presentation& p) {
  std::string out = "generators";
  for (const auto& n : p.names.names()) out += " " + n;
  out += "\n";
  for (const auto& r : p.relators)
    out += "relator " + origin_token(r.origin) + " " + to_string(r.relator, &p.names) + "\n";
  return out;
}

std::string to_json(const Presentation& p) {
  Json j{{"generators", generators_json(p)}, {"relators", relators_json(p)}};
  return j.dump(2) + "\n";
}

std::string to_gap(const Presentation& p) {
  std::string out = "F := FreeGroup(";
  if (p.generator_count() == 0) out += "0";
  for (std::size_t g = 0; g < p.generator_count(); ++g) out += (g ? ", \"" : "\"") + p.names[g] + "\"";
  out += ");;\nG := F / [";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out += (i ? ", " : " ") + gap_word(p.relators[i].relator);
  out += " ];;\n";
  return out;
}

std::string render(const Presentation& p, Format format) {
  switch (format) {
    case Format::Text: return to_text(p);
    case Format::Json: return to_json(p);
    case Format::Gap: return to_gap(p);
  }
  return {};
}

Presentation parse_presentation(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  Presentation p = i < text.size() && text[i] == '{' ? parse_json_presentation(text)
                                                     : parse_text_presentation(text);
  try {
    p.validate();
  } catch (const PresentationError& e) {
    throw InputError(e.what());
  }
  return p;
}

std::string render(const OrbifoldPresentation& p, Format format) {
  if (!p.symbolic()) return render(p.concrete(), format);
  const Presentation& base = p.base;
  switch (format) {
    case Format::Gap:
      throw PresentationError("GAP export needs concrete weights");
    case Format::Text: {
      std::string out = to_text(base);
      for (const auto& pw : p.powers)
        out += "power " + pw.origin + " " + pw.weight.to_string() + " " + to_string(pw.base, &base.names) + "\n";
      return out;
    }
    case Format::Json: {
      Json powers = Json::array();
      for (const auto& pw : p.powers)
        powers.push_back(Json{{"origin", pw.origin},
                              {"weight", weight_json(pw.weight)},
                              {"word", letters_json(pw.base)},
                              {"text", to_string(pw.base, &base.names)}});
      Json j{{"generators", generators_json(base)}, {"relators", relators_json(base)}, {"powers", powers}};
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_meridians(const Analysis& a, Format format) {
  if (format == Format::Gap) throw InputError("meridian tables have no GAP form");
  const auto& table = a.meridians;
  const auto& prep = a.arrangement;
  std::size_t n = prep.line_count();
  if (format == Format::Text) {
    std::string out;
    for (std::size_t i = 0; i < table.line_meridians.size(); ++i) {
      std::size_t source = i < n ? prep.source_of(i) : prep.spec.infinity_index;
      out += line_name(i) + " line=" + std::to_string(source + 1) + (i == n ? " infinity " : " finite ") +
             to_string(table.line_meridians[i]) + "\n";
    }
    for (const auto& pt : prep.points) {
      out += point_name(pt.label) + (pt.finite() ? " finite " : " infinity ") + to_string(table.point_meridians[pt.label - 1]) + "\n";
    }
    return out;
  }
  Json lines = Json::array();
  for (std::size_t i = 0; i < table.line_meridians.size(); ++i) {
    std::size_t source = i < n ? prep.source_of(i) : prep.spec.infinity_index;
    lines.push_back(Json{{"name", line_name(i)},
                         {"source", source + 1},
                         {"infinity", i == n},
                         {"word", letters_json(table.line_meridians[i])},
                         {"text", to_string(table.line_meridians[i])}});
  }
  Json points = Json::array();
  for (std::size_t j = 0; j < prep.points.size(); ++j) {
    const auto& pt = prep.points[j];
    Json incident = Json::array();
    for (std::size_t l : pt.lines) incident.push_back(line_name(l));
    if (pt.on_infinity_line) incident.push_back(line_name(n));
    const Word& w = table.point_meridians[pt.label - 1];
    points.push_back(Json{{"name", point_name(pt.label)},
                          {"kind", pt.finite() ? "finite" : "infinity"},
                          {"location", to_string(prep.point_coordinates[j])},
                          {"lines", incident},
                          {"word", letters_json(w)},
                          {"text", to_string(w)}});
  }
  Json j{{"lines", lines}, {"points", points}};
  return j.dump(2) + "\n";
}

}  // namespace arrpi
