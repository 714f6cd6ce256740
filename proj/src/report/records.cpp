#include "cmfam/report/records.hpp"

#include <cctype>
#include <unordered_map>

#include "cmfam/io/errors.hpp"

namespace cmfam::report {

std::string escape_value(std::string_view v) {
  std::string out;
  for (char c : v) {
    switch (c) {
    case '%':
      out += "%25";
      break;
    case ' ':
      out += "%20";
      break;
    case '\t':
      out += "%09";
      break;
    case '\n':
      out += "%0A";
      break;
    default:
      out += c;
    }
  }
  return out;
}

std::string unescape_value(std::string_view v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == '%' && i + 2 < v.size()) {
      const std::string hex(v.substr(i + 1, 2));
      out += static_cast<char>(std::stoi(hex, nullptr, 16));
      i += 2;
    } else {
      out += v[i];
    }
  }
  return out;
}

std::string to_line(const Record &r) {
  std::string s = r.type;
  for (const auto &[k, v] : r.fields)
    s += " " + k + "=" + escape_value(v);
  return s;
}

Record parse_line(std::string_view line, const std::string &where) {
  Record r;
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string_view {
    while (pos < line.size() && line[pos] == ' ')
      ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ')
      ++pos;
    return line.substr(start, pos - start);
  };
  const auto type = next_token();
  if (type.empty())
    throw io::ParseError(where, "record has no type");
  r.type = std::string(type);
  for (auto tok = next_token(); !tok.empty(); tok = next_token()) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw io::ParseError(where, "expected key=value, got '" + std::string(tok) + "'");
    const std::string key(tok.substr(0, eq));
    const auto raw = tok.substr(eq + 1);
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (raw[i] == '%' && (i + 2 >= raw.size() || !std::isxdigit(static_cast<unsigned char>(raw[i + 1])) ||
                            !std::isxdigit(static_cast<unsigned char>(raw[i + 2]))))
        throw io::ParseError(where, "bad escape in value of " + key);
    if (!r.fields.emplace(key, unescape_value(raw)).second)
      throw io::ParseError(where, "duplicate key " + key);
  }
  return r;
}

std::vector<std::pair<std::size_t, Record>> parse_records(std::string_view text,
                                                          const std::string &origin) {
  std::vector<std::pair<std::size_t, Record>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#')
      continue;
    out.emplace_back(line_no, parse_line(line, origin + ":" + std::to_string(line_no) + ":1"));
  }
  return out;
}

const std::vector<std::string> &primary_key(const std::string &type) {
  static const std::unordered_map<std::string, std::vector<std::string>> keys = {
      {"group", {"group"}},
      {"parameters", {"group"}},
      {"reflection_class", {"group", "name"}},
      {"hyperplane_orbit", {"group", "omega"}},
      {"character", {"group", "label"}},
      {"family", {"group", "kind", "members"}},
      {"partition", {"group", "kind"}},
      {"cm", {"group"}},
      {"plane", {"group", "normal"}},
      {"orbit", {"group", "rep"}},
      {"variety", {"group"}},
      {"sampling", {"group"}},
      {"martino", {"group"}},
      {"evidence", {"group", "text"}},
  };
  static const std::vector<std::string> fallback = {"group"};
  auto it = keys.find(type);
  return it == keys.end() ? fallback : it->second;
}

} // namespace cmfam::report
