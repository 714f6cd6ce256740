#include "cmfam/exact/linear_form.hpp"

#include <stdexcept>

namespace cmfam::exact {

LinearForm LinearForm::variable(ParamIndex p, const Cyclotomic &coeff) {
  LinearForm f;
  f.set(p, coeff);
  return f;
}

void LinearForm::set(ParamIndex p, Cyclotomic v) {
  if (v.is_zero())
    terms_.erase(p);
  else
    terms_[p] = std::move(v);
}

Cyclotomic LinearForm::coeff(ParamIndex p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

bool LinearForm::is_rational() const {
  for (const auto &[p, c] : terms_)
    if (!c.is_rational())
      return false;
  return true;
}

std::vector<Rational> LinearForm::rational_coords(const std::vector<ParamIndex> &order) const {
  std::vector<Rational> out(order.size(), Rational(0));
  std::size_t found = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = terms_.find(order[i]);
    if (it == terms_.end())
      continue;
    out[i] = it->second.rational_value();
    ++found;
  }
  if (found != terms_.size())
    throw std::domain_error("linear form uses a parameter outside the coordinate order");
  return out;
}

Cyclotomic LinearForm::eval(const std::vector<ParamIndex> &order,
                            const std::vector<Rational> &point) const {
  if (order.size() != point.size())
    throw std::invalid_argument("point dimension does not match coordinate order");
  Cyclotomic acc;
  std::size_t found = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = terms_.find(order[i]);
    if (it == terms_.end())
      continue;
    acc += it->second * Cyclotomic(point[i]);
    ++found;
  }
  if (found != terms_.size())
    throw std::domain_error("linear form uses a parameter outside the coordinate order");
  return acc;
}

LinearForm &LinearForm::operator+=(const LinearForm &o) {
  for (const auto &[p, c] : o.terms_)
    set(p, coeff(p) + c);
  return *this;
}

LinearForm &LinearForm::operator-=(const LinearForm &o) {
  for (const auto &[p, c] : o.terms_)
    set(p, coeff(p) - c);
  return *this;
}

LinearForm &LinearForm::operator*=(const Cyclotomic &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[p, c] : terms_)
    c *= s;
  return *this;
}

bool operator==(const LinearForm &a, const LinearForm &b) {
  if (a.terms_.size() != b.terms_.size())
    return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second))
      return false;
  return true;
}

std::string LinearForm::to_string(int conductor) const {
  std::string out;
  for (const auto &[p, c] : terms_) {
    std::string term;
    if (c.is_rational()) {
      const Rational r = c.rational_value();
      if (r == Rational(1))
        term = p.to_string();
      else if (r == Rational(-1))
        term = "-" + p.to_string();
      else
        term = r.to_string() + "*" + p.to_string();
    } else {
      term = "(" + (conductor > 0 ? c.to_string(conductor) : c.to_string()) + ")*" + p.to_string();
    }
    if (!out.empty() && term[0] != '-')
      out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

} // namespace cmfam::exact
