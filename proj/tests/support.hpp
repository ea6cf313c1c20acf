#pragma once

#include <random>
#include <string>
#include <vector>

#include "arrpi/geometry.hpp"
#include "arrpi/io.hpp"

namespace arrpi::testing {

inline std::string fixture(const std::string& name) { return std::string(ARRPI_FIXTURES) + "/" + name; }

inline ArrangementSpec load(const std::string& name) { return read_arrangement_file(fixture(name)); }

inline ProjectiveLine line(long a, long b, long c) {
  return normalize_line({Rational(a), Rational(b), Rational(c)});
}

// Random real arrangement with 2..max_lines distinct lines whose
// coefficients are small rationals p/q, |p| <= 3, 1 <= q <= 2.
inline ArrangementSpec random_arrangement(std::mt19937& rng, std::size_t max_lines = 6) {
  std::uniform_int_distribution<std::size_t> count(2, max_lines);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  ArrangementSpec spec;
  std::size_t k = count(rng);
  while (spec.lines.size() < k) {
    std::array<Rational, 3> c;
    for (auto& x : c) x = Rational(num(rng), den(rng));
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    ProjectiveLine l = normalize_line(c);
    bool fresh = true;
    for (const auto& m : spec.lines) fresh = fresh && !(m == l);
    if (fresh) spec.lines.push_back(l);
  }
  spec.infinity_index = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
  spec.name = "random";
  return spec;
}

}  // namespace arrpi::testing
