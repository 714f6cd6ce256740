#include "cmfam/exact/polynomial.hpp"

namespace cmfam::exact {

bool poly_divides(const Polynomial &f, const Polynomial &g) {
  if (f.is_zero())
    throw std::domain_error("poly_divides: divisor is the zero polynomial");
  return divmod(g, f).second.is_zero();
}

std::optional<Polynomial> exact_quotient(const Polynomial &g, const Polynomial &f) {
  auto [q, r] = divmod(g, f);
  if (!r.is_zero())
    return std::nullopt;
  return q;
}

std::string to_string(const Polynomial &p) { return format_power_sum(p.coeffs(), "t"); }

Polynomial demote(const CyclotomicPolynomial &p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto &x : p.coeffs())
    c.push_back(x.rational_value());
  return Polynomial(std::move(c));
}

} // namespace cmfam::exact
