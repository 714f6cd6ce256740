#include "cmfam/exact/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace cmfam::exact {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+')
    s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(const mpz_class &num, const mpz_class &den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1 / v_));
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer())
    throw std::overflow_error("rational " + to_string() + " is not an integer");
  const mpz_class n = num();
  if (!n.fits_slong_p())
    throw std::overflow_error("integer " + to_string() + " out of range");
  return n.get_si();
}

mpz_class gcd(const mpz_class &a, const mpz_class &b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class lcm(const mpz_class &a, const mpz_class &b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

} // namespace cmfam::exact
