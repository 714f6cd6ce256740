#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmfam/exact/cyclotomic.hpp"
#include "cmfam/exact/rational.hpp"

namespace cmfam::exact {

/// Dense univariate polynomial, index = degree, never with a trailing zero
/// coefficient. The zero polynomial has an empty coefficient vector.
template <class C> class basic_polynomial {
public:
  basic_polynomial() = default;
  explicit basic_polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  basic_polynomial(const C &constant) : c_{constant} { trim(); } // NOLINT(implicit)

  /// The monomial coeff * t^k.
  static basic_polynomial monomial(std::size_t k, const C &coeff = C(1)) {
    std::vector<C> c(k + 1, C(0));
    c[k] = coeff;
    return basic_polynomial(std::move(c));
  }

  const std::vector<C> &coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C &leading() const {
    if (c_.empty())
      throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  /// Order of vanishing at 0. Throws std::domain_error for zero.
  std::size_t trailing_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero_coeff(c_[i]))
        return i;
    throw std::domain_error("trailing degree of zero polynomial");
  }

  C eval(const C &x) const {
    C acc(0);
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * x + c_[i];
    return acc;
  }

  basic_polynomial &operator+=(const basic_polynomial &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }
  basic_polynomial &operator-=(const basic_polynomial &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  basic_polynomial &operator*=(const basic_polynomial &o) { return *this = *this * o; }

  friend basic_polynomial operator+(basic_polynomial a, const basic_polynomial &b) { return a += b; }
  friend basic_polynomial operator-(basic_polynomial a, const basic_polynomial &b) { return a -= b; }
  friend basic_polynomial operator-(basic_polynomial a) {
    for (auto &x : a.c_)
      x = -x;
    return a;
  }
  friend basic_polynomial operator*(const basic_polynomial &a, const basic_polynomial &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_coeff(a.c_[i]))
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    }
    return basic_polynomial(std::move(r));
  }
  friend bool operator==(const basic_polynomial &a, const basic_polynomial &b) {
    return a.c_ == b.c_;
  }

  /// Euclidean division over the coefficient field: returns (q, r) with
  /// a = q*b + r and deg r < deg b. Throws std::domain_error for b = 0.
  friend std::pair<basic_polynomial, basic_polynomial> divmod(const basic_polynomial &a,
                                                              const basic_polynomial &b) {
    if (b.is_zero())
      throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
      return {basic_polynomial(), a};
    std::vector<C> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<C> q(rem.size() - db, C(0));
    const C lead_inv = C(1) / b.c_.back();
    for (std::size_t i = rem.size(); i-- > db;) {
      if (is_zero_coeff(rem[i]))
        continue;
      const C f = rem[i] * lead_inv;
      q[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j)
        rem[i - db + j] -= f * b.c_[j];
    }
    rem.resize(db);
    return {basic_polynomial(std::move(q)), basic_polynomial(std::move(rem))};
  }

private:
  static bool is_zero_coeff(const C &x) { return x.is_zero(); }
  void trim() {
    while (!c_.empty() && is_zero_coeff(c_.back()))
      c_.pop_back();
  }

  std::vector<C> c_;
};

using Polynomial = basic_polynomial<Rational>;
using CyclotomicPolynomial = basic_polynomial<Cyclotomic>;

/// True iff f divides g in Q[t]. Throws std::domain_error for f = 0.
bool poly_divides(const Polynomial &f, const Polynomial &g);

/// Exact quotient g / f, or nullopt when f does not divide g.
std::optional<Polynomial> exact_quotient(const Polynomial &g, const Polynomial &f);

/// Trailing degree of a nonzero polynomial.
inline std::size_t trailing_degree(const Polynomial &f) { return f.trailing_degree(); }

/// Canonical text, ascending degree, e.g. "t^4+t^8", "1+2*t".
std::string to_string(const Polynomial &p);

/// Converts a polynomial whose coefficients are all rational.
/// Throws std::domain_error when some coefficient is irrational.
Polynomial demote(const CyclotomicPolynomial &p);

} // namespace cmfam::exact
