#include "cmfam/group/matrix.hpp"

#include <stdexcept>

namespace cmfam::group {

Matrix::Matrix(int rows, int cols, int conductor)
    : r_(rows), c_(cols), n_(conductor),
      a_(static_cast<std::size_t>(rows * cols), Cyclotomic(0).embed(conductor)) {}

Matrix Matrix::identity(int n, int conductor) {
  Matrix m(n, n, conductor);
  for (int i = 0; i < n; ++i)
    m.set(i, i, Cyclotomic(1));
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclotomic>> &rows, int conductor) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c, conductor);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j)
      m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

void Matrix::set(int i, int j, const Cyclotomic &v) {
  if (n_ % v.conductor() == 0) {
    a_[idx(i, j)] = v.embed(n_);
    return;
  }
  auto r = v.restrict_to(n_);
  if (!r)
    throw std::domain_error("matrix entry " + v.to_string() + " does not lie in Q(zeta_" +
                            std::to_string(n_) + ")");
  a_[idx(i, j)] = *r;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (c_ != o.r_)
    throw std::invalid_argument("matrix dimension mismatch in product");
  if (n_ != o.n_)
    throw std::invalid_argument("matrix conductor mismatch in product");
  Matrix m(r_, o.c_, n_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Cyclotomic &x = a_[idx(i, k)];
      if (x.is_zero())
        continue;
      for (int j = 0; j < o.c_; ++j) {
        const Cyclotomic &y = o.a_[o.idx(k, j)];
        if (!y.is_zero())
          m.a_[m.idx(i, j)] += x * y;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix &o) const {
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix &o) const {
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] -= o.a_[i];
  return m;
}

Matrix Matrix::scaled(const Cyclotomic &s) const {
  Matrix m = *this;
  for (auto &x : m.a_)
    x *= s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_, n_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      m.a_[m.idx(j, i)] = a_[idx(i, j)];
  return m;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Cyclotomic &x = a_[idx(i, j)];
      if (i == j ? !x.is_one() : !x.is_zero())
        return false;
    }
  return true;
}

Cyclotomic Matrix::trace() const {
  Cyclotomic t = Cyclotomic(0).embed(n_);
  for (int i = 0; i < std::min(r_, c_); ++i)
    t += a_[idx(i, i)];
  return t;
}

namespace {

std::vector<std::vector<Cyclotomic>> to_rows(const Matrix &m) {
  std::vector<std::vector<Cyclotomic>> rows(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  return rows;
}

} // namespace

std::vector<int> row_reduce(std::vector<std::vector<Cyclotomic>> &m) {
  std::vector<int> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero())
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    const Cyclotomic inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero())
        continue;
      const Cyclotomic f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero())
          m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

Cyclotomic Matrix::det() const {
  if (r_ != c_)
    throw std::invalid_argument("determinant of non-square matrix");
  auto m = to_rows(*this);
  Cyclotomic d = Cyclotomic(1).embed(n_);
  const auto n = static_cast<std::size_t>(r_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero())
      ++p;
    if (p == n)
      return Cyclotomic(0).embed(n_);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    const Cyclotomic inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero())
        continue;
      const Cyclotomic f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j)
        m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

int Matrix::rank() const {
  auto m = to_rows(*this);
  return static_cast<int>(row_reduce(m).size());
}

std::vector<std::vector<Cyclotomic>> Matrix::nullspace() const {
  auto m = to_rows(*this);
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(c_), false);
  for (int p : pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (int f = 0; f < c_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)])
      continue;
    std::vector<Cyclotomic> v(static_cast<std::size_t>(c_), Cyclotomic(0).embed(n_));
    v[static_cast<std::size_t>(f)] = Cyclotomic(1).embed(n_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] = -m[i][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::inverse() const {
  if (r_ != c_)
    throw std::invalid_argument("inverse of non-square matrix");
  auto m = to_rows(*this);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      m[static_cast<std::size_t>(i)].push_back(Cyclotomic(i == j ? 1 : 0).embed(n_));
  const auto pivots = row_reduce(m);
  if (static_cast<int>(pivots.size()) < r_ || pivots[static_cast<std::size_t>(r_ - 1)] >= r_)
    throw std::domain_error("singular matrix");
  Matrix inv(r_, r_, n_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      inv.a_[inv.idx(i, j)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r_ + j)];
  return inv;
}

exact::CyclotomicPolynomial Matrix::charpoly() const {
  // Faddeev-LeVerrier: M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I,
  // c_{n-k} = -tr(A M_k) / k.
  if (r_ != c_)
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const int n = r_;
  std::vector<Cyclotomic> c(static_cast<std::size_t>(n + 1), Cyclotomic(0));
  c[static_cast<std::size_t>(n)] = 1;
  Matrix mk(n, n, n_);
  for (int k = 1; k <= n; ++k) {
    mk = (*this) * mk + identity(n, n_).scaled(c[static_cast<std::size_t>(n - k + 1)]);
    const Cyclotomic t = ((*this) * mk).trace();
    c[static_cast<std::size_t>(n - k)] = -t / Cyclotomic(k);
  }
  return exact::CyclotomicPolynomial(std::move(c));
}

std::string Matrix::key() const {
  std::string k;
  for (const auto &x : a_) {
    for (const auto &q : x.coeffs()) {
      k += q.to_string();
      k += ',';
    }
    k += ';';
  }
  return k;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < r_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < c_; ++j) {
      if (j)
        s += ',';
      s += a_[idx(i, j)].to_string();
    }
    s += "]";
  }
  return s + "]";
}

std::string projective_key(std::vector<Cyclotomic> v, int conductor) {
  std::size_t first = 0;
  while (first < v.size() && v[first].is_zero())
    ++first;
  if (first == v.size())
    throw std::domain_error("projective key of the zero vector");
  const Cyclotomic inv = v[first].inverse();
  std::string k;
  for (auto &x : v) {
    x *= inv;
    k += x.embed(conductor).key();
    k += '|';
  }
  return k;
}

} // namespace cmfam::group
