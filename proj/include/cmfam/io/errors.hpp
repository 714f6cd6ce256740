#pragma once

#include <stdexcept>
#include <string>

namespace cmfam::io {

/// Malformed input: bad JSON syntax or a field of the wrong shape. `where`
/// is "file:line:column" for syntax errors and "file#/json/pointer" for
/// field errors.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string where, const std::string &what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string &where() const { return where_; }

private:
  std::string where_;
};

/// Well-formed input that violates a mathematical invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A requested bundle or golden file does not exist.
class MissingInputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cmfam::io
