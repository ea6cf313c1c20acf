#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrpi {

// One category per module; the CLI maps each category to its own exit code.
enum class ErrorCategory {
  Input = 2,         // arrangement / weight / image file syntax
  Geometry = 3,      // degenerate or non-generic geometry
  Word = 4,          // word syntax, generator out of range
  Sweep = 5,         // pencil-sweep invariant violation
  Presentation = 6,  // presentation assembly, LAC data, weights
  Invariants = 7,    // matrices, certification inputs
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }
  int exit_code() const noexcept { return static_cast<int>(category_); }

 private:
  ErrorCategory category_;
};

class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : Error(ErrorCategory::Input,
              line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& what) : Error(ErrorCategory::Geometry, what) {}
};

class WordError : public Error {
 public:
  explicit WordError(const std::string& what) : Error(ErrorCategory::Word, what) {}
};

class SweepError : public Error {
 public:
  explicit SweepError(const std::string& what) : Error(ErrorCategory::Sweep, what) {}
};

class PresentationError : public Error {
 public:
  explicit PresentationError(const std::string& what)
      : Error(ErrorCategory::Presentation, what) {}
};

class InvariantsError : public Error {
 public:
  explicit InvariantsError(const std::string& what) : Error(ErrorCategory::Invariants, what) {}
};

}  // namespace arrpi
