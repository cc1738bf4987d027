#include "coxangle/rational.hpp"

#include <stdexcept>

#include "coxangle/errors.hpp"

namespace coxangle {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidEntry: return "InvalidEntry";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NonCrystallographic: return "NonCrystallographic";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OrbitBudgetExceeded: return "OrbitBudgetExceeded";
    case ErrorCode::KernelRange: return "KernelRange";
    case ErrorCode::InvalidTitsDiagram: return "InvalidTitsDiagram";
    case ErrorCode::NontrivialGamma: return "NontrivialGamma";
    case ErrorCode::ZeroRelativeRank: return "ZeroRelativeRank";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix product of mismatched dimensions");
  Matrix out(dim_);
  Rational acc;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      acc = 0;
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& a = (*this)(r, k);
        if (sgn(a) == 0) continue;
        acc += a * rhs(k, c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product of mismatched dimensions");
  Vector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Rational acc = 0;
    for (std::size_t k = 0; k < dim_; ++k) acc += (*this)(r, k) * v[k];
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool Matrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational dot(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "inner product of vectors of dimension " + std::to_string(u.size()) + " and " +
                    std::to_string(v.size()));
  }
  Rational acc = 0;
  for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * v[k];
  return acc;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(col, c), a(pivot, c));
        std::swap(inv(col, c), inv(pivot, c));
      }
    }
    const Rational scale = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const Rational& q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace coxangle
