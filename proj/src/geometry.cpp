#include "coxangle/geometry.hpp"

#include <stdexcept>

#include "coxangle/errors.hpp"

namespace coxangle {

namespace {

Vector unit(std::size_t dim, std::size_t k, const Rational& scale = 1) {
  Vector v(dim, Rational(0));
  v[k] = scale;
  return v;
}

// e_a - e_b, zero-based coordinates.
Vector difference(std::size_t dim, std::size_t a, std::size_t b) {
  Vector v(dim, Rational(0));
  v[a] = 1;
  v[b] = -1;
  return v;
}

// Simple roots of one component in Bourbaki numbering 1..rank (Plates I-IX).
std::vector<Vector> bourbaki_roots(const ComponentType& t) {
  const std::size_t dim = bourbaki_dimension(t);
  const int n = t.rank;
  std::vector<Vector> roots;
  const Rational half(1, 2);
  switch (t.family) {
    case Family::A:
      for (int k = 0; k < n; ++k) roots.push_back(difference(dim, k, k + 1));
      break;
    case Family::B:
      for (int k = 0; k < n - 1; ++k) roots.push_back(difference(dim, k, k + 1));
      roots.push_back(unit(dim, n - 1));
      break;
    case Family::D: {
      for (int k = 0; k < n - 1; ++k) roots.push_back(difference(dim, k, k + 1));
      Vector last(dim, Rational(0));
      last[n - 2] = 1;
      last[n - 1] = 1;
      roots.push_back(last);
      break;
    }
    case Family::E: {
      Vector a1(8, -half);
      a1[0] = half;
      a1[7] = half;
      roots.push_back(a1);
      Vector a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      roots.push_back(a2);
      for (int k = 3; k <= n; ++k) roots.push_back(difference(8, k - 2, k - 3));  // e_{k-1} - e_{k-2}
      break;
    }
    case Family::F: {
      roots.push_back(difference(4, 1, 2));
      roots.push_back(difference(4, 2, 3));
      roots.push_back(unit(4, 3));
      roots.push_back(Vector{half, -half, -half, -half});
      break;
    }
    case Family::G:
      roots.push_back(Vector{1, -1, 0});
      roots.push_back(Vector{-2, 1, 1});
      break;
    case Family::H:
    case Family::I:
      throw Error(ErrorCode::NonCrystallographic, t.name() + " has no rational realization");
  }
  return roots;
}

}  // namespace

std::size_t bourbaki_dimension(const ComponentType& t) {
  switch (t.family) {
    case Family::A: return static_cast<std::size_t>(t.rank) + 1;
    case Family::B:
    case Family::D: return static_cast<std::size_t>(t.rank);
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 3;
    case Family::H:
    case Family::I: break;
  }
  throw Error(ErrorCode::NonCrystallographic, t.name() + " has no rational realization");
}

Realization realize(const CoxeterDiagram& d) {
  for (const Edge& e : d.edges())
    if (e.m != 3 && e.m != 4 && e.m != 6)
      throw Error(ErrorCode::NonCrystallographic, "label m(" + std::to_string(e.i) + "," + std::to_string(e.j) + ") = " +
                                                      std::to_string(e.m) + " is not crystallographic");

  Realization r(d);
  const int n = d.rank();
  const auto components = connected_components(d);
  std::size_t dim = 0;
  for (const auto& c : components) dim += bourbaki_dimension(c.component_types().front());
  r.dim_ = dim;
  r.roots_.assign(n, Vector(dim, Rational(0)));

  std::size_t offset = 0;
  for (const auto& c : components) {
    const auto rec = recognize_connected(c);
    const std::size_t cdim = bourbaki_dimension(rec->type);
    const auto local = bourbaki_roots(rec->type);
    for (std::size_t k = 0; k < local.size(); ++k) {
      Vector& target = r.roots_[d.index_of(rec->bourbaki_to_node[k])];
      for (std::size_t x = 0; x < cdim; ++x) target[offset + x] = local[k][x];
    }
    offset += cdim;
  }

  for (int a = 0; a < n; ++a) {
    const Rational norm2 = dot(r.roots_[a], r.roots_[a]);
    Vector co = r.roots_[a];
    for (auto& x : co) x *= 2 / norm2;
    r.coroots_.push_back(std::move(co));
  }

  // Cartan matrix A_ab = <alpha_a, alpha_b^vee>; omega_a = sum_b (A^-1)_ab alpha_b.
  Matrix cartan(n);
  r.cartan_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cartan(a, b) = dot(r.roots_[a], r.coroots_[b]);
      if (cartan(a, b).get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      r.cartan_[a * n + b] = static_cast<int>(cartan(a, b).get_num().get_si());
    }
  const Matrix inv = n > 0 ? inverse(cartan) : Matrix(0);
  for (int a = 0; a < n; ++a) {
    Vector w(dim, Rational(0));
    for (int b = 0; b < n; ++b) {
      if (sgn(inv(a, b)) == 0) continue;
      for (std::size_t x = 0; x < dim; ++x) w[x] += inv(a, b) * r.roots_[b][x];
    }
    r.weights_.push_back(std::move(w));
  }
  return r;
}

Rational Realization::inner(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "vector dimension does not match the realization (" + std::to_string(dim_) + ")");
  return dot(u, v);
}

Vector Realization::reflect_at(int a, const Vector& v) const {
  const Rational k = inner(v, coroots_[a]);
  Vector out = v;
  if (sgn(k) != 0)
    for (std::size_t x = 0; x < dim_; ++x) out[x] -= k * roots_[a][x];
  return out;
}

Vector Realization::reflect(Node i, const Vector& v) const { return reflect_at(diagram_.index_of(i), v); }

Matrix Realization::reflection_matrix_at(int a) const {
  Matrix m = Matrix::identity(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) -= roots_[a][r] * coroots_[a][c];
  return m;
}

std::vector<Rational> Realization::pairings(const Vector& v) const {
  std::vector<Rational> out;
  for (int a = 0; a < rank(); ++a) out.push_back(inner(v, coroots_[a]));
  return out;
}

Vector Realization::from_pairings(const std::vector<Rational>& labels) const {
  Vector v(dim_, Rational(0));
  for (int a = 0; a < rank(); ++a) {
    if (sgn(labels[a]) == 0) continue;
    for (std::size_t x = 0; x < dim_; ++x) v[x] += labels[a] * weights_[a][x];
  }
  return v;
}

Rational inner(const Realization& r, const Vector& u, const Vector& v) { return r.inner(u, v); }

Vector reflect(const Realization& r, Node i, const Vector& v) { return r.reflect(i, v); }

}  // namespace coxangle
