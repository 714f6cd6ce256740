#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cmfam::report {

/// One line of the machine format: `type key=value key=value ...` with keys
/// in byte order. Values are percent-escaped for '%', space, tab and newline.
struct Record {
  std::string type;
  std::map<std::string, std::string> fields;

  Record() = default;
  explicit Record(std::string t) : type(std::move(t)) {}
  Record &set(const std::string &key, std::string value) {
    fields[key] = std::move(value);
    return *this;
  }
  const std::string &at(const std::string &key) const { return fields.at(key); }

  friend bool operator==(const Record &, const Record &) = default;
};

std::string escape_value(std::string_view v);
std::string unescape_value(std::string_view v);

std::string to_line(const Record &r);
/// Throws io::ParseError naming `where` on malformed input.
Record parse_line(std::string_view line, const std::string &where);

/// Records from a machine-format text; blank lines and lines starting with
/// '#' are skipped. Line numbers (1-based) are returned alongside.
std::vector<std::pair<std::size_t, Record>> parse_records(std::string_view text,
                                                          const std::string &origin);

/// Fields that identify a record of the given type when matching goldens.
const std::vector<std::string> &primary_key(const std::string &type);

} // namespace cmfam::report
