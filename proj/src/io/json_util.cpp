#include "cmfam/io/json_util.hpp"

#include <fstream>
#include <sstream>

namespace cmfam::io {

json parse_json_text(const std::string &text, const std::string &origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col),
                     pos == std::string::npos ? msg : msg.substr(pos));
  }
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MissingInputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

void Reader::fail(const json::json_pointer &p, const std::string &what) const {
  throw ParseError(origin_ + "#" + p.to_string(), what);
}

const json &Reader::at(const json::json_pointer &p) const {
  if (!root_.contains(p))
    fail(p, "missing field");
  return root_.at(p);
}

std::string Reader::string_at(const json::json_pointer &p) const {
  const json &v = at(p);
  if (!v.is_string())
    fail(p, "expected a string");
  return v.get<std::string>();
}

long Reader::int_at(const json::json_pointer &p) const {
  const json &v = at(p);
  if (!v.is_number_integer())
    fail(p, "expected an integer");
  return v.get<long>();
}

const json &Reader::array_at(const json::json_pointer &p) const {
  const json &v = at(p);
  if (!v.is_array())
    fail(p, "expected an array");
  return v;
}

std::vector<long> Reader::int_array_at(const json::json_pointer &p) const {
  const json &a = array_at(p);
  std::vector<long> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(int_at(p / i));
  return out;
}

std::vector<std::string> Reader::string_array_at(const json::json_pointer &p) const {
  const json &a = array_at(p);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(string_at(p / i));
  return out;
}

exact::Cyclotomic Reader::cyclotomic_at(const json::json_pointer &p, int conductor) const {
  const json &terms = array_at(p);
  std::vector<std::pair<long, exact::Rational>> parsed;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto q = p / i;
    const json &t = array_at(q);
    if (t.size() != 3)
      fail(q, "expected [exponent, numerator, denominator]");
    const long e = int_at(q / 0);
    if (e < 0 || e >= conductor)
      fail(q / 0, "exponent outside [0, " + std::to_string(conductor) + ")");
    try {
      const exact::Rational num = exact::Rational::parse(string_at(q / 1));
      const exact::Rational den = exact::Rational::parse(string_at(q / 2));
      if (!num.is_integer() || !den.is_integer() || den.sign() <= 0)
        fail(q, "numerator and denominator must be integers with positive denominator");
      parsed.emplace_back(e, num / den);
    } catch (const std::invalid_argument &ex) {
      fail(q, ex.what());
    } catch (const std::domain_error &ex) {
      fail(q, ex.what());
    }
  }
  return exact::Cyclotomic::from_terms(conductor, parsed);
}

json cyclotomic_to_json(const exact::Cyclotomic &c, int conductor) {
  auto r = c.restrict_to(conductor);
  if (!r)
    throw std::domain_error("value " + c.to_string() + " does not lie in Q(zeta_" +
                            std::to_string(conductor) + ")");
  json out = json::array();
  const auto &co = r->coeffs();
  for (std::size_t i = 0; i < co.size(); ++i)
    if (!co[i].is_zero())
      out.push_back(json::array({static_cast<long>(i), co[i].num().get_str(), co[i].den().get_str()}));
  return out;
}

} // namespace cmfam::io
