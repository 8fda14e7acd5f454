#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrtag {

// Bad input data: malformed files, unknown tags, inconsistent dimensions.
// The CLI maps this family to exit status 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A DataError pinned to a 1-based line of some input stream.
class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : DataError("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Misuse of an API or CLI: bad flags, inconsistent configuration.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lrtag
