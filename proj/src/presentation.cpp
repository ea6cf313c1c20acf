#include "arrpi/presentation.hpp"

#include <cctype>

#include "arrpi/errors.hpp"

namespace arrpi {

std::vector<Word> Presentation::relator_words() const {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) out.push_back(r.relator);
  return out;
}

std::size_t Presentation::total_length() const {
  std::size_t total = 0;
  for (const auto& r : relators) total += r.relator.size();
  return total;
}

void Presentation::validate() const {
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].relator.empty())
      throw PresentationError("relator " + std::to_string(i + 1) + " is the empty word");
    if (relators[i].relator.generator_bound() > generator_count())
      throw PresentationError("relator " + std::to_string(i + 1) + " uses an unknown generator");
  }
}

Presentation complement_presentation(const SweepResult& result) {
  Presentation p;
  p.names = GeneratorNames::standard(result.generator_count());
  p.relators = result.all_relations();
  return p;
}

Weight Weight::finite(std::uint64_t value) {
  if (value == 0) throw PresentationError("weights must be positive");
  return Weight(Kind::Finite, value, {});
}

Weight Weight::symbol(std::string name) {
  if (name.empty()) throw PresentationError("empty weight symbol");
  return Weight(Kind::Symbolic, 0, std::move(name));
}

Weight Weight::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  if (text.empty()) throw PresentationError("empty weight");
  if (text[0] == '-' || std::isdigit(static_cast<unsigned char>(text[0]))) {
    for (std::size_t i = text[0] == '-' ? 1 : 0; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw PresentationError("malformed weight '" + std::string(text) + "'");
    if (text[0] == '-') throw PresentationError("weights must be positive");
    return finite(std::stoull(std::string(text)));
  }
  for (char c : text)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw PresentationError("malformed weight '" + std::string(text) + "'");
  return symbol(std::string(text));
}

std::string Weight::to_string() const {
  switch (kind_) {
    case Kind::Finite:
      return std::to_string(value_);
    case Kind::Infinite:
      return "inf";
    case Kind::Symbolic:
      return name_;
  }
  return {};
}

WeightVector WeightVector::uniform(std::size_t lines, std::size_t points, const Weight& w) {
  return WeightVector{std::vector<Weight>(lines + points, w)};
}

WeightVector WeightVector::parse(std::string_view text) {
  WeightVector out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.weights.push_back(Weight::parse(text.substr(start, i - start)));
  }
  return out;
}

bool OrbifoldPresentation::symbolic() const {
  for (const auto& p : powers)
    if (p.weight.is_symbolic()) return true;
  return false;
}

Presentation OrbifoldPresentation::concrete() const {
  Presentation out = base;
  for (const auto& p : powers) {
    if (p.weight.is_symbolic())
      throw PresentationError("weight '" + p.weight.name() + "' of " + p.origin + " is symbolic");
    Word relator = p.base.power(static_cast<long>(p.weight.value()));
    if (!relator.empty()) out.relators.push_back(Relation{std::move(relator), p.origin});
  }
  return out;
}

OrbifoldPresentation orbifold_presentation(const SweepResult& result, const MeridianTable& table,
                                           const WeightVector& weights) {
  std::size_t lines = table.line_meridians.size();
  std::size_t points = table.point_meridians.size();
  if (weights.weights.size() != lines + points)
    throw PresentationError("expected " + std::to_string(lines + points) + " weights (" +
                            std::to_string(lines) + " lines, " + std::to_string(points) +
                            " singular points), got " + std::to_string(weights.weights.size()));
  OrbifoldPresentation out;
  out.base = complement_presentation(result);
  for (std::size_t i = 0; i < lines + points; ++i) {
    const Weight& w = weights.weights[i];
    if (w.is_infinite()) continue;
    bool is_line = i < lines;
    const Word& base = is_line ? table.line_meridians[i] : table.point_meridians[i - lines];
    std::string origin = is_line ? "L" + std::to_string(i + 1) : "E" + std::to_string(i - lines + 1);
    out.powers.push_back(PowerRelator{base, w, std::move(origin)});
  }
  return out;
}

}  // namespace arrpi
