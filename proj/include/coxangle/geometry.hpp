#pragma once

// Exact rational realization of crystallographic Coxeter diagrams in
// Bourbaki ambient coordinates.

#include <cstddef>
#include <vector>

#include "coxangle/diagram.hpp"
#include "coxangle/rational.hpp"

namespace coxangle {

class Realization {
 public:
  const CoxeterDiagram& diagram() const { return diagram_; }
  std::size_t ambient_dim() const { return dim_; }
  int rank() const { return diagram_.rank(); }

  const Vector& simple_root(Node i) const { return roots_[diagram_.index_of(i)]; }
  const Vector& coroot(Node i) const { return coroots_[diagram_.index_of(i)]; }
  const Vector& fundamental_weight(Node i) const { return weights_[diagram_.index_of(i)]; }

  // Position-indexed accessors (positions follow diagram().nodes()).
  const Vector& root_at(int a) const { return roots_[a]; }
  const Vector& coroot_at(int a) const { return coroots_[a]; }
  const Vector& weight_at(int a) const { return weights_[a]; }

  /// Cartan integers <alpha_a, alpha_b^vee>, row-major by position.
  int cartan_at(int a, int b) const { return cartan_[a * rank() + b]; }
  const std::vector<int>& cartan() const { return cartan_; }

  /// Exact Euclidean inner product; throws DimensionMismatch.
  Rational inner(const Vector& u, const Vector& v) const;

  /// s_i(v) = v - <v, alpha_i^vee> alpha_i. Throws UnknownNode, DimensionMismatch.
  Vector reflect(Node i, const Vector& v) const;
  Vector reflect_at(int a, const Vector& v) const;

  /// Matrix of s_i acting on the ambient space.
  Matrix reflection_matrix_at(int a) const;

  /// Pairings <v, alpha_a^vee> for every position a.
  std::vector<Rational> pairings(const Vector& v) const;

  /// Recovers v = sum_a labels[a] * omega_a. Requires v in the root span.
  Vector from_pairings(const std::vector<Rational>& labels) const;

 private:
  friend Realization realize(const CoxeterDiagram& d);
  explicit Realization(CoxeterDiagram d) : diagram_(std::move(d)) {}

  CoxeterDiagram diagram_;
  std::size_t dim_ = 0;
  std::vector<Vector> roots_;
  std::vector<Vector> coroots_;
  std::vector<Vector> weights_;
  std::vector<int> cartan_;
};

/// Orthogonal sum of the Bourbaki realizations of the components. Throws
/// NonCrystallographic when some m_ij is outside {2, 3, 4, 6}.
Realization realize(const CoxeterDiagram& d);

/// Free-function forms of the member operations.
Rational inner(const Realization& r, const Vector& u, const Vector& v);
Vector reflect(const Realization& r, Node i, const Vector& v);

/// Ambient dimension of the Bourbaki realization of one component type.
std::size_t bourbaki_dimension(const ComponentType& t);

}  // namespace coxangle
