#pragma once

// Weyl-group computations on a realization: orbits, group orders, longest
// elements, the opposition involution and element orders.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coxangle/diagram.hpp"
#include "coxangle/geometry.hpp"
#include "coxangle/rational.hpp"

namespace coxangle {

inline constexpr std::size_t kDefaultOrbitBudget = 10'000'000;

/// Element of W in the ambient representation. `word` lists simple
/// reflections in product order: w = s_word[0] * s_word[1] * ...
/// Elements of non-crystallographic components carry only the word and an
/// empty (dimension 0) matrix.
struct OrthogonalElement {
  Matrix matrix;
  std::vector<Node> word;

  bool realized() const { return matrix.dim() > 0; }
};

/// W-orbit stored as integer rows over one common denominator, rows sorted
/// lexicographically.
class Orbit {
 public:
  std::size_t size() const { return dim_ == 0 ? count_ : numerators_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  const Integer& denominator() const { return denominator_; }
  std::span<const std::int64_t> numerators(std::size_t k) const { return {numerators_.data() + k * dim_, dim_}; }

  Vector vector(std::size_t k) const;
  std::vector<Vector> vectors() const;
  bool contains(const Vector& v) const;

 private:
  friend Orbit weyl_orbit(const Realization&, const Vector&, std::size_t);
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  Integer denominator_ = 1;
  std::vector<std::int64_t> numerators_;
};

/// {w v : w in W}. Throws OrbitBudgetExceeded past `budget` vectors and
/// KernelRange if the scaled labels do not fit the integer kernels.
Orbit weyl_orbit(const Realization& r, const Vector& v, std::size_t budget = kDefaultOrbitBudget);

/// Size of the orbit of omega_i and the largest <omega_i, x> over orbit
/// points x != omega_i (zero when the orbit is a single point). Streams the
/// orbit level by level without materialising it.
struct WeightOrbitSummary {
  std::uint64_t size = 0;
  Rational norm2;
  Rational max_other_inner;
};
WeightOrbitSummary weight_orbit_summary(const Realization& r, Node i, std::size_t budget = kDefaultOrbitBudget);

/// Classical |W|; throws NotSpherical only through diagram construction.
Integer group_order(const CoxeterDiagram& d);

/// w_0 by greedy descent from rho.
OrthogonalElement longest_element(const Realization& r);

/// Longest element of the parabolic subgroup W_J inside the realization.
OrthogonalElement longest_element(const Realization& r, const NodeSet& parabolic);

/// Greedy-descent word of the longest element of W_J (product order).
std::vector<Node> longest_word(const Realization& r, const NodeSet& parabolic);

/// sigma with w_0(alpha_i) = -alpha_sigma(i), computed componentwise.
Permutation opposition(const CoxeterDiagram& d);

/// Smallest k >= 1 with g^k = 1. Requires a realized element.
long element_order(const OrthogonalElement& g);

/// Number of positive roots (word length of w_0).
std::size_t positive_root_count(const CoxeterDiagram& d);

}  // namespace coxangle
