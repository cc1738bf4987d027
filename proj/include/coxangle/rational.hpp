#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace coxangle {

using Integer = mpz_class;
using Rational = mpq_class;

/// Point of an ambient Euclidean space with exact rational coordinates.
using Vector = std::vector<Rational>;

/// Row-major square matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix transposed() const;
  bool is_identity() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

/// Canonical "p/q" (or "p") string.
std::string to_string(const Rational& q);

/// Exact dot product; throws DimensionMismatch.
Rational dot(std::span<const Rational> u, std::span<const Rational> v);

/// Inverse of a square matrix by exact Gauss-Jordan elimination. Throws
/// std::domain_error when singular.
Matrix inverse(const Matrix& m);

Integer lcm_of_denominators(std::span<const Rational> values);

}  // namespace coxangle
