#pragma once

#include <string>
#include <vector>

#include "cmfam/exact/cyclotomic.hpp"
#include "cmfam/exact/polynomial.hpp"

namespace cmfam::group {

using exact::Cyclotomic;

/// Dense matrix of cyclotomics, row-major. All entries of a matrix share
/// one conductor so that products never re-embed.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, int conductor);
  static Matrix identity(int n, int conductor);
  /// Builds from rows; entries are embedded into `conductor`.
  static Matrix from_rows(const std::vector<std::vector<Cyclotomic>> &rows, int conductor);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int conductor() const { return n_; }
  const Cyclotomic &operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, const Cyclotomic &v);

  Matrix operator*(const Matrix &o) const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix scaled(const Cyclotomic &s) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix &a, const Matrix &b) { return a.a_ == b.a_ && a.r_ == b.r_; }

  bool is_identity() const;
  Cyclotomic trace() const;
  Cyclotomic det() const;
  int rank() const;
  /// Basis (as column vectors) of the right null space.
  std::vector<std::vector<Cyclotomic>> nullspace() const;
  /// Inverse; throws std::domain_error when singular.
  Matrix inverse() const;
  /// Characteristic polynomial det(x*I - A), monic, coefficients low to high.
  exact::CyclotomicPolynomial charpoly() const;

  /// Canonical structural key used for hashing group elements.
  std::string key() const;
  std::string to_string() const;

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * c_ + j); }
  int r_ = 0, c_ = 0, n_ = 1;
  std::vector<Cyclotomic> a_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<std::vector<Cyclotomic>> &m);

/// Scales a nonzero vector so that its first nonzero entry is 1 and
/// returns the canonical key of the resulting projective point.
std::string projective_key(std::vector<Cyclotomic> v, int conductor);

} // namespace cmfam::group
