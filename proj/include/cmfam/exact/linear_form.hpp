#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cmfam/exact/cyclotomic.hpp"
#include "cmfam/exact/rational.hpp"

namespace cmfam::exact {

/// Parameter index (Omega, j): Omega is the 1-based hyperplane-orbit number
/// and j ranges over 0..e_Omega-1.
struct ParamIndex {
  int omega = 1;
  int j = 0;
  friend auto operator<=>(const ParamIndex &, const ParamIndex &) = default;
  std::string to_string() const {
    return "k[" + std::to_string(omega) + "," + std::to_string(j) + "]";
  }
};

/// Homogeneous linear form sum_i a_i * k_i with cyclotomic coefficients.
/// Zero coefficients are never stored, so structural equality is equality.
class LinearForm {
public:
  LinearForm() = default;
  static LinearForm variable(ParamIndex p, const Cyclotomic &coeff = Cyclotomic(1));

  const std::map<ParamIndex, Cyclotomic> &terms() const { return terms_; }
  Cyclotomic coeff(ParamIndex p) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  /// Coefficients along `order`, all rational. Throws std::domain_error if
  /// a coefficient is irrational or an index is missing from `order`.
  std::vector<Rational> rational_coords(const std::vector<ParamIndex> &order) const;

  /// Value at a point given in `order` coordinates.
  Cyclotomic eval(const std::vector<ParamIndex> &order, const std::vector<Rational> &point) const;

  LinearForm &operator+=(const LinearForm &o);
  LinearForm &operator-=(const LinearForm &o);
  LinearForm &operator*=(const Cyclotomic &s);

  friend LinearForm operator+(LinearForm a, const LinearForm &b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm &b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Cyclotomic &s) { return a *= s; }
  friend LinearForm operator*(const Cyclotomic &s, LinearForm a) { return a *= s; }
  friend LinearForm operator-(LinearForm a) { return a *= Cyclotomic(-1); }
  friend bool operator==(const LinearForm &a, const LinearForm &b);

  /// Canonical text: terms in index order, e.g. "12*k[1,0]-12*k[1,1]";
  /// irrational coefficients are parenthesized over `conductor`.
  std::string to_string(int conductor = 0) const;

private:
  void set(ParamIndex p, Cyclotomic v);
  std::map<ParamIndex, Cyclotomic> terms_;
};

} // namespace cmfam::exact
