#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmfam/exact/rational.hpp"

namespace cmfam::exact {

int euler_phi(int n);
int lcm_int(int a, int b);

/// Coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<long> &cyclotomic_polynomial(int n);

/// An element of Q(zeta_n), stored as coordinates in the power basis
/// 1, z, ..., z^(phi(n)-1) reduced modulo the n-th cyclotomic polynomial.
///
/// Binary operations on operands of different conductors embed both into
/// Q(zeta_lcm) first. Equality is decided after such an embedding, so
/// an element compares equal to its images in larger fields.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational &r);                      // NOLINT(implicit)
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}      // NOLINT(implicit)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}     // NOLINT(implicit)

  /// zeta_n^k for any integer k.
  static Cyclotomic zeta(int n, long k = 1);
  /// Power-basis coordinates; `coeffs.size()` must equal phi(n).
  static Cyclotomic from_coeffs(int n, std::vector<Rational> coeffs);
  /// Sum of coeff * zeta_n^exp for arbitrary integer exponents.
  static Cyclotomic from_terms(int n, std::span<const std::pair<long, Rational>> terms);

  int conductor() const { return n_; }
  const std::vector<Rational> &coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error when the element is not rational.
  Rational rational_value() const;

  /// Image in Q(zeta_m); m must be a multiple of the conductor.
  Cyclotomic embed(int m) const;
  /// The same element written over conductor m, if it lies in Q(zeta_m).
  std::optional<Cyclotomic> restrict_to(int m) const;
  /// Representation over the smallest conductor dividing the current one.
  Cyclotomic minimal() const;

  /// Galois automorphism zeta -> zeta^a, gcd(a, n) = 1.
  Cyclotomic galois(long a) const;
  Cyclotomic conj() const { return galois(-1); }
  /// Throws std::domain_error for zero.
  Cyclotomic inverse() const;

  /// Canonical text over the own conductor, e.g. "1-z^2", "-1/2*z".
  std::string to_string() const;
  /// Canonical text over conductor m (embedding or restricting first).
  /// Throws std::domain_error when the element does not lie in Q(zeta_m).
  std::string to_string(int m) const;
  /// Structural key: conductor plus coordinates. Equal keys imply equal
  /// elements; use `minimal().key()` for a representation-independent key.
  std::string key() const;

  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator/=(const Cyclotomic &o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic &a);

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);

  friend std::ostream &operator<<(std::ostream &os, const Cyclotomic &c) {
    return os << c.to_string();
  }

private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void unify_with(Cyclotomic &o);

  int n_ = 1;
  std::vector<Rational> c_;
};

/// Formats sum c_i * <var>^i terms in canonical order: ascending exponent,
/// coefficient 1 and -1 folded into the sign, zero written as "0".
std::string format_power_sum(std::span<const Rational> coeffs, std::string_view var);

} // namespace cmfam::exact

template <> struct std::hash<cmfam::exact::Cyclotomic> {
  std::size_t operator()(const cmfam::exact::Cyclotomic &c) const noexcept {
    return std::hash<std::string>{}(c.minimal().key());
  }
};
