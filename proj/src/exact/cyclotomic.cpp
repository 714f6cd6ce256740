#include "cmfam/exact/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmfam::exact {

namespace {

struct Field {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;                       // monic, low to high, size phi+1
  std::vector<std::vector<Rational>> powers;    // z^k reduced, k in [0, n)
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long> &den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic_poly(int n) {
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0)
      num = poly_div_exact(num, cyclotomic_polynomial(d));
  return num;
}

std::unique_ptr<Field> build_field(int n) {
  auto f = std::make_unique<Field>();
  f->n = n;
  f->poly = cyclotomic_polynomial(n);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  const auto phi = static_cast<std::size_t>(f->phi);
  f->powers.reserve(static_cast<std::size_t>(n));
  std::vector<Rational> cur(phi, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->powers.push_back(cur);
    // multiply by z and reduce
    Rational top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    if (!top.is_zero())
      for (std::size_t i = 0; i < phi; ++i)
        cur[i] -= top * Rational(f->poly[i]);
  }
  return f;
}

std::mutex &registry_mutex() {
  static std::mutex m;
  return m;
}

const Field &field(int n) {
  if (n <= 0)
    throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::map<int, std::unique_ptr<Field>> fields;
  {
    std::lock_guard lock(registry_mutex());
    auto it = fields.find(n);
    if (it != fields.end())
      return *it->second;
  }
  auto built = build_field(n);
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = fields.emplace(n, std::move(built));
  return *it->second;
}

long mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

/// Solves A x = b over Q for a full-column-rank A (rows x cols), returning
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero())
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero())
        continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero())
      return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = b[i];
  return x;
}

} // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

const std::vector<long> &cyclotomic_polynomial(int n) {
  static std::mutex m;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find(n);
    if (it != cache.end())
      return it->second;
  }
  std::vector<long> p = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic_poly(n);
  std::lock_guard lock(m);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(const Rational &r) : n_(1), c_{r} {}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  const Field &f = field(n);
  return Cyclotomic(n, f.powers[static_cast<std::size_t>(mod(k, n))]);
}

Cyclotomic Cyclotomic::from_coeffs(int n, std::vector<Rational> coeffs) {
  const Field &f = field(n);
  if (static_cast<int>(coeffs.size()) != f.phi)
    throw std::invalid_argument("cyclotomic coordinate vector has wrong length for conductor " +
                                std::to_string(n));
  return Cyclotomic(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_terms(int n, std::span<const std::pair<long, Rational>> terms) {
  const Field &f = field(n);
  std::vector<Rational> c(static_cast<std::size_t>(f.phi), Rational(0));
  for (const auto &[e, coeff] : terms) {
    if (coeff.is_zero())
      continue;
    const auto &p = f.powers[static_cast<std::size_t>(mod(e, n))];
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!p[i].is_zero())
        c[i] += coeff * p[i];
  }
  return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto &x : c_)
    if (!x.is_zero())
      return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == Rational(1); }

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational())
    throw std::domain_error("cyclotomic " + to_string() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m == n_)
    return *this;
  if (m % n_ != 0)
    throw std::invalid_argument("cannot embed conductor " + std::to_string(n_) + " into " +
                                std::to_string(m));
  const long step = m / n_;
  std::vector<std::pair<long, Rational>> terms;
  terms.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      terms.emplace_back(static_cast<long>(i) * step, c_[i]);
  return from_terms(m, terms);
}

std::optional<Cyclotomic> Cyclotomic::restrict_to(int m) const {
  if (m == n_)
    return *this;
  if (is_rational())
    return Cyclotomic(c_[0]).embed(m);
  const int big = lcm_int(n_, m);
  if (big == m)
    return embed(m);
  const Cyclotomic x = embed(big);
  const int phi_m = field(m).phi;
  const int phi_big = field(big).phi;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(phi_big),
                                       std::vector<Rational>(static_cast<std::size_t>(phi_m)));
  for (int j = 0; j < phi_m; ++j) {
    const Cyclotomic basis = zeta(m, j).embed(big);
    for (int i = 0; i < phi_big; ++i)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          basis.c_[static_cast<std::size_t>(i)];
  }
  auto sol = solve_exact(std::move(a), x.c_);
  if (!sol)
    return std::nullopt;
  return Cyclotomic(m, std::move(*sol));
}

Cyclotomic Cyclotomic::minimal() const {
  if (is_rational())
    return Cyclotomic(c_[0]);
  for (int d = 2; d < n_; ++d) {
    if (n_ % d != 0)
      continue;
    if (auto r = restrict_to(d))
      return *r;
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (std::gcd(mod(a, n_), static_cast<long>(n_)) != 1)
    throw std::invalid_argument("galois exponent not coprime to conductor");
  std::vector<std::pair<long, Rational>> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      terms.emplace_back(static_cast<long>(i) * a, c_[i]);
  return from_terms(n_, terms);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero cyclotomic");
  if (is_rational())
    return Cyclotomic(c_[0].inverse()).embed(n_);
  // Solve (multiplication-by-this matrix) x = e_0.
  const std::size_t phi = c_.size();
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi));
  for (std::size_t j = 0; j < phi; ++j) {
    const Cyclotomic col = *this * zeta(n_, static_cast<long>(j));
    for (std::size_t i = 0; i < phi; ++i)
      a[i][j] = col.c_[i];
  }
  std::vector<Rational> b(phi, Rational(0));
  b[0] = 1;
  auto sol = solve_exact(std::move(a), std::move(b));
  if (!sol)
    throw std::logic_error("singular multiplication matrix for nonzero cyclotomic");
  return Cyclotomic(n_, std::move(*sol));
}

std::string format_power_sum(std::span<const Rational> coeffs, std::string_view var) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational &c = coeffs[i];
    if (c.is_zero())
      continue;
    std::string term;
    if (i == 0) {
      term = c.to_string();
    } else {
      std::string mono(var);
      if (i > 1)
        mono += "^" + std::to_string(i);
      if (c == Rational(1))
        term = mono;
      else if (c == Rational(-1))
        term = "-" + mono;
      else
        term = c.to_string() + "*" + mono;
    }
    if (!out.empty() && term[0] != '-')
      out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string Cyclotomic::to_string() const { return format_power_sum(c_, "z"); }

std::string Cyclotomic::to_string(int m) const {
  auto r = restrict_to(m);
  if (!r)
    throw std::domain_error("element " + to_string() + " (conductor " + std::to_string(n_) +
                            ") does not lie in Q(zeta_" + std::to_string(m) + ")");
  return r->to_string();
}

std::string Cyclotomic::key() const {
  std::string k = std::to_string(n_) + ":";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i)
      k += ',';
    k += c_[i].to_string();
  }
  return k;
}

void Cyclotomic::unify_with(Cyclotomic &o) {
  if (n_ == o.n_)
    return;
  // Rationals embed cheaply; avoid growing the conductor for them.
  if (o.n_ == 1) {
    o = o.embed(n_);
    return;
  }
  if (n_ == 1) {
    *this = embed(o.n_);
    return;
  }
  const int m = lcm_int(n_, o.n_);
  *this = embed(m);
  o = o.embed(m);
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic rhs = o;
  unify_with(rhs);
  return *this += rhs;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] -= o.c_[i];
    return *this;
  }
  Cyclotomic rhs = o;
  unify_with(rhs);
  return *this -= rhs;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  if (n_ != o.n_) {
    if (o.n_ == 1) {
      const Rational &s = o.c_[0];
      for (auto &x : c_)
        x *= s;
      return *this;
    }
    Cyclotomic rhs = o;
    unify_with(rhs);
    return *this *= rhs;
  }
  const Field &f = field(n_);
  const std::size_t phi = c_.size();
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (c_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (!o.c_[j].is_zero())
        prod[i + j] += c_[i] * o.c_[j];
  }
  for (std::size_t d = prod.size(); d-- > phi;) {
    if (prod[d].is_zero())
      continue;
    const Rational top = prod[d];
    for (std::size_t k = 0; k < phi; ++k)
      if (f.poly[k] != 0)
        prod[d - phi + k] -= top * Rational(f.poly[k]);
    prod[d] = 0;
  }
  prod.resize(phi);
  c_ = std::move(prod);
  return *this;
}

Cyclotomic operator-(const Cyclotomic &a) {
  Cyclotomic r = a;
  for (auto &x : r.c_)
    x = -x;
  return r;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.n_ == b.n_)
    return a.c_ == b.c_;
  Cyclotomic x = a, y = b;
  x.unify_with(y);
  return x.c_ == y.c_;
}

} // namespace cmfam::exact
