#include "arrpi/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "arrpi/errors.hpp"

namespace arrpi {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ArrangementSpec parse_arrangement(std::string_view text) {
  ArrangementSpec spec;
  std::optional<std::size_t> infinity;
  std::size_t infinity_line = 0;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split_ws(raw);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0];
    if (key == "line") {
      if (tokens.size() != 4) throw InputError("expected 'line a b c'", number);
      std::array<Rational, 3> coeffs;
      try {
        for (std::size_t i = 0; i < 3; ++i) coeffs[i] = parse_rational(tokens[i + 1]);
      } catch (const InputError& e) {
        throw InputError(e.what(), number);
      }
      ProjectiveLine l;
      try {
        l = normalize_line(coeffs);
      } catch (const GeometryError& e) {
        throw InputError(e.what(), number);
      }
      for (std::size_t i = 0; i < spec.lines.size(); ++i)
        if (spec.lines[i] == l)
          throw InputError("duplicate of line " + std::to_string(i + 1), number);
      spec.lines.push_back(l);
    } else if (key == "infinity") {
      if (tokens.size() != 2) throw InputError("expected 'infinity <index>'", number);
      if (infinity) throw InputError("line at infinity declared twice", number);
      std::size_t used = 0;
      unsigned long index = 0;
      try {
        index = std::stoul(tokens[1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[1].size() || index == 0)
        throw InputError("malformed infinity index '" + tokens[1] + "'", number);
      infinity = index - 1;
      infinity_line = number;
    } else if (key == "name") {
      std::string_view rest = raw.substr(raw.find("name") + 4);
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r'))
        rest.remove_suffix(1);
      spec.name = std::string(rest);
    } else {
      throw InputError("unknown record '" + key + "'", number);
    }
  }
  if (spec.lines.empty()) throw InputError("arrangement has no lines");
  if (!infinity) throw InputError("missing 'infinity <index>' declaration");
  if (*infinity >= spec.lines.size())
    throw InputError("infinity index " + std::to_string(*infinity + 1) + " out of range (" +
                         std::to_string(spec.lines.size()) + " lines)",
                     infinity_line);
  spec.infinity_index = *infinity;
  return spec;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ArrangementSpec read_arrangement_file(const std::string& path) {
  try {
    return parse_arrangement(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string print_arrangement(const ArrangementSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "name " + spec.name + "\n";
  for (const auto& l : spec.lines)
    out += "line " + to_string(l.coeffs[0]) + " " + to_string(l.coeffs[1]) + " " + to_string(l.coeffs[2]) + "\n";
  out += "infinity " + std::to_string(spec.infinity_index + 1) + "\n";
  return out;
}

ProjectivePoint parse_projective_point(std::string_view text) {
  std::array<Rational, 3> coords;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t end = text.find(':', start);
    if ((end == std::string_view::npos) != (i == 2))
      throw InputError("expected a point 'a:b:c', got '" + std::string(text) + "'");
    if (end == std::string_view::npos) end = text.size();
    coords[i] = parse_rational(text.substr(start, end - start));
    start = end + 1;
  }
  try {
    return normalize_point(coords);
  } catch (const GeometryError&) {
    throw InputError("the point 0:0:0 does not exist");
  }
}

}  // namespace arrpi
