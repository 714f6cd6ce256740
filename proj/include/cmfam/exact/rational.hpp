#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cmfam::exact {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : v_(v) {}                         // NOLINT(implicit)
  Rational(int v) : v_(v) {}                          // NOLINT(implicit)
  Rational(const mpz_class &v) : v_(v) {}             // NOLINT(implicit)
  Rational(const mpz_class &num, const mpz_class &den);
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "a", "-a" or "a/b" with decimal integers. Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class &raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Inverse; throws std::domain_error for zero.
  Rational inverse() const;

  /// Throws std::overflow_error when the value is not an integer that fits.
  std::int64_t to_int64() const;

  std::string to_string() const { return v_.get_str(); }

  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.to_string();
  }

private:
  mpq_class v_;
};

mpz_class gcd(const mpz_class &a, const mpz_class &b);
mpz_class lcm(const mpz_class &a, const mpz_class &b);

} // namespace cmfam::exact

template <> struct std::hash<cmfam::exact::Rational> {
  std::size_t operator()(const cmfam::exact::Rational &r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
