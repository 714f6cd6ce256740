#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmfam/exact/cyclotomic.hpp"
#include "cmfam/io/errors.hpp"

namespace cmfam::io {

using json = nlohmann::json;

/// Reads and parses a JSON file. Throws MissingInputError when the file is
/// absent and ParseError (with line and column) on syntax errors.
json read_json_file(const std::filesystem::path &path);

/// Parses JSON text; `origin` names the source in error messages.
json parse_json_text(const std::string &text, const std::string &origin);

/// Typed field access that reports the JSON pointer of the offending field.
class Reader {
public:
  Reader(const json &root, std::string origin) : root_(root), origin_(std::move(origin)) {}

  const json &at(const json::json_pointer &p) const;
  bool has(const json::json_pointer &p) const { return root_.contains(p); }
  std::string string_at(const json::json_pointer &p) const;
  long int_at(const json::json_pointer &p) const;
  const json &array_at(const json::json_pointer &p) const;
  std::vector<long> int_array_at(const json::json_pointer &p) const;
  std::vector<std::string> string_array_at(const json::json_pointer &p) const;
  /// Cyclotomic written as [[exponent, "num", "den"], ...] over `conductor`.
  exact::Cyclotomic cyclotomic_at(const json::json_pointer &p, int conductor) const;

  [[noreturn]] void fail(const json::json_pointer &p, const std::string &what) const;
  const std::string &origin() const { return origin_; }

private:
  const json &root_;
  std::string origin_;
};

/// Inverse of Reader::cyclotomic_at.
json cyclotomic_to_json(const exact::Cyclotomic &c, int conductor);

} // namespace cmfam::io
