#pragma once

#include <stdexcept>
#include <string>

namespace astk {

// Invalid generator/harness configuration (bad parameter ranges, model
// minimums, unknown model names).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries the 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

struct DuplicateEdgeError : std::runtime_error {
  explicit DuplicateEdgeError(const std::string& what)
      : std::runtime_error(what) {}
};

struct EmptyInputError : std::runtime_error {
  EmptyInputError() : std::runtime_error("empty edge list") {}
};

// Requested a dense computation on a graph above the size threshold.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace astk
