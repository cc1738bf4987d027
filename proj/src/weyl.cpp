#include "coxangle/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "coxangle/errors.hpp"
#include "coxangle/kernels.hpp"

namespace coxangle {

namespace {

// Largest |label sum| accepted for the int32 kernels. Orbit labels of a
// dominant weight are bounded by its pairing with the highest coroot, whose
// simple-coroot coefficients are at most 6.
constexpr std::int64_t kLabelSumLimit = std::int64_t{1} << 24;

std::size_t round_up(std::size_t n) { return (n + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes + kernels::kLanes; }

// Lane-major block of label vectors.
struct Frontier {
  int rank = 0;
  std::size_t stride = 0;
  std::size_t count = 0;
  std::vector<std::int32_t> data;

  void reset(int r, std::size_t capacity) {
    rank = r;
    stride = round_up(capacity);
    count = 0;
    data.assign(static_cast<std::size_t>(rank) * stride, 0);
  }
  std::int32_t at(int a, std::size_t n) const { return data[a * stride + n]; }
};

// Moves integer labels into the dominant chamber (all labels >= 0).
std::vector<std::int64_t> dominant_labels(const Realization& r, std::vector<std::int64_t> labels) {
  const int n = r.rank();
  while (true) {
    int a = 0;
    while (a < n && labels[a] >= 0) ++a;
    if (a == n) return labels;
    const std::int64_t k = labels[a];
    for (int b = 0; b < n; ++b) {
      std::int64_t delta = 0;
      if (__builtin_mul_overflow(k, static_cast<std::int64_t>(r.cartan_at(a, b)), &delta) ||
          __builtin_sub_overflow(labels[b], delta, &labels[b]))
        throw Error(ErrorCode::KernelRange, "orbit labels overflow 64-bit range");
    }
  }
}

std::vector<std::int32_t> narrow_labels(const std::vector<std::int64_t>& labels) {
  std::int64_t sum = 0;
  for (std::int64_t x : labels) sum += x;
  if (sum >= kLabelSumLimit)
    throw Error(ErrorCode::KernelRange, "scaled weight labels exceed the exact integer kernel range");
  return {labels.begin(), labels.end()};
}

// Enumerates the orbit of a dominant label vector by levels. Every orbit
// point except the root is reached exactly once: from its parent through
// the smallest simple reflection that raises it. `visit` sees each level.
template <typename Visit>
std::uint64_t for_each_level(const Realization& r, const std::vector<std::int32_t>& dominant, std::size_t budget,
                             Visit&& visit) {
  const int n = r.rank();
  const kernels::KernelTable& k = kernels::active();
  std::vector<std::vector<std::int32_t>> rows(n, std::vector<std::int32_t>(n));
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) rows[j][a] = r.cartan_at(j, a);

  Frontier current, next;
  current.reset(n, 1);
  for (int a = 0; a < n; ++a) current.data[a * current.stride] = dominant[a];
  current.count = 1;
  std::uint64_t total = 1;
  if (budget < 1) throw Error(ErrorCode::OrbitBudgetExceeded, "orbit budget of 0 vectors");
  visit(current, true);

  while (current.count > 0) {
    next.reset(n, current.count * static_cast<std::size_t>(std::max(n, 1)));
    for (int j = 0; j < n; ++j) {
      next.count += k.expand(current.data.data(), current.stride, current.count, n, j, rows[j].data(),
                             next.data.data(), next.stride, next.count);
    }
    total += next.count;
    if (total > budget)
      throw Error(ErrorCode::OrbitBudgetExceeded,
                  "orbit exceeds the budget of " + std::to_string(budget) + " vectors");
    if (next.count > 0) visit(next, false);
    std::swap(current, next);
  }
  return total;
}

struct ComponentFacts {
  Integer order;
  std::size_t positive_roots;
};

ComponentFacts facts(const ComponentType& t) {
  Integer factorial = 1;
  for (int k = 2; k <= t.rank; ++k) factorial *= k;
  const std::size_t n = static_cast<std::size_t>(t.rank);
  Integer pow2 = 1;
  switch (t.family) {
    case Family::A: return {factorial * (t.rank + 1), n * (n + 1) / 2};
    case Family::B:
      mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), n);
      return {pow2 * factorial, n * n};
    case Family::D:
      mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), n - 1);
      return {pow2 * factorial, n * (n - 1)};
    case Family::E:
      if (t.rank == 6) return {51840, 36};
      if (t.rank == 7) return {2903040, 63};
      return {696729600, 120};
    case Family::F: return {1152, 24};
    case Family::G: return {12, 6};
    case Family::H: return t.rank == 3 ? ComponentFacts{120, 15} : ComponentFacts{14400, 60};
    case Family::I: return {2 * t.m, static_cast<std::size_t>(t.m)};
  }
  return {1, 0};
}

}  // namespace

Vector Orbit::vector(std::size_t k) const {
  Vector v(dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    v[x] = Rational(Integer(static_cast<long>(numerators_[k * dim_ + x])), denominator_);
    v[x].canonicalize();
  }
  return v;
}

std::vector<Vector> Orbit::vectors() const {
  std::vector<Vector> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(vector(k));
  return out;
}

bool Orbit::contains(const Vector& v) const {
  if (v.size() != dim_) return false;
  std::vector<std::int64_t> key(dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    const Rational scaled = v[x] * denominator_;
    if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) return false;
    key[x] = scaled.get_num().get_si();
  }
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto row = numerators(mid);
    const auto cmp = std::lexicographical_compare_three_way(row.begin(), row.end(), key.begin(), key.end());
    if (cmp == 0) return true;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

Orbit weyl_orbit(const Realization& r, const Vector& v, std::size_t budget) {
  const int n = r.rank();
  const std::size_t dim = r.ambient_dim();
  if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "vector dimension does not match the realization");

  // v = (part in the root span) + (part fixed by W).
  const std::vector<Rational> q = r.pairings(v);
  Vector fixed = v;
  const Vector spanned = r.from_pairings(q);
  for (std::size_t x = 0; x < dim; ++x) fixed[x] -= spanned[x];

  const Integer label_scale = lcm_of_denominators(q);
  std::vector<std::int64_t> labels;
  for (const Rational& x : q) {
    const Rational s = x * label_scale;
    if (!s.get_num().fits_slong_p()) throw Error(ErrorCode::KernelRange, "weight labels exceed 64-bit range");
    labels.push_back(s.get_num().get_si());
  }
  const std::vector<std::int32_t> dominant = narrow_labels(dominant_labels(r, std::move(labels)));

  // Point = (1/label_scale) sum_a L_a omega_a + fixed. Clear all
  // denominators into one integer scale.
  std::vector<Rational> entries;
  for (int a = 0; a < n; ++a)
    for (const Rational& x : r.weight_at(a)) entries.push_back(x / label_scale);
  for (const Rational& x : fixed) entries.push_back(x);
  const Integer scale = lcm_of_denominators(entries);
  std::vector<std::int64_t> basis(static_cast<std::size_t>(n) * dim);
  std::vector<std::int64_t> offset(dim);
  for (int a = 0; a < n; ++a)
    for (std::size_t x = 0; x < dim; ++x) {
      const Rational s = r.weight_at(a)[x] * scale / label_scale;
      if (!s.get_num().fits_slong_p()) throw Error(ErrorCode::KernelRange, "weight coordinates exceed 64-bit range");
      basis[a * dim + x] = s.get_num().get_si();
    }
  for (std::size_t x = 0; x < dim; ++x) {
    const Rational s = fixed[x] * scale;
    if (!s.get_num().fits_slong_p()) throw Error(ErrorCode::KernelRange, "coordinates exceed 64-bit range");
    offset[x] = s.get_num().get_si();
  }

  Orbit orbit;
  orbit.dim_ = dim;
  std::vector<std::int64_t>& rows = orbit.numerators_;
  const auto total = for_each_level(r, dominant, budget, [&](const Frontier& f, bool) {
    for (std::size_t e = 0; e < f.count; ++e) {
      for (std::size_t x = 0; x < dim; ++x) {
        std::int64_t acc = offset[x];
        for (int a = 0; a < n; ++a) {
          std::int64_t term = 0;
          if (__builtin_mul_overflow(static_cast<std::int64_t>(f.at(a, e)), basis[a * dim + x], &term) ||
              __builtin_add_overflow(acc, term, &acc))
            throw Error(ErrorCode::KernelRange, "orbit coordinates exceed 64-bit range");
        }
        rows.push_back(acc);
      }
    }
  });
  orbit.count_ = static_cast<std::size_t>(total);

  // Canonical form: common denominator coprime to the numerators.
  std::int64_t g = 0;
  for (std::int64_t x : rows) g = std::gcd(g, x);
  Integer den = scale;
  if (g > 1) {
    Integer common;
    mpz_gcd(common.get_mpz_t(), den.get_mpz_t(), Integer(static_cast<long>(g)).get_mpz_t());
    const std::int64_t c = common.get_si();
    if (c > 1) {
      for (std::int64_t& x : rows) x /= c;
      den /= common;
    }
  }
  orbit.denominator_ = den;

  if (dim > 0) {
    std::vector<std::size_t> order(orbit.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(rows.begin() + a * dim, rows.begin() + (a + 1) * dim, rows.begin() + b * dim,
                                          rows.begin() + (b + 1) * dim);
    });
    std::vector<std::int64_t> sorted;
    sorted.reserve(rows.size());
    for (std::size_t k : order) sorted.insert(sorted.end(), rows.begin() + k * dim, rows.begin() + (k + 1) * dim);
    rows = std::move(sorted);
  }
  return orbit;
}

WeightOrbitSummary weight_orbit_summary(const Realization& r, Node i, std::size_t budget) {
  const int n = r.rank();
  const int t = r.diagram().index_of(i);

  // <omega_t, x> for x = sum_a L_a omega_a is sum_a L_a <omega_t, omega_a>.
  std::vector<Rational> gram;
  for (int a = 0; a < n; ++a) gram.push_back(r.inner(r.weight_at(t), r.weight_at(a)));
  const Integer scale = lcm_of_denominators(gram);
  std::vector<std::int32_t> weights;
  for (const Rational& g : gram) {
    const Rational s = g * scale;
    if (!s.get_num().fits_sint_p()) throw Error(ErrorCode::KernelRange, "weight Gram entries exceed 32-bit range");
    weights.push_back(static_cast<std::int32_t>(s.get_num().get_si()));
  }

  std::vector<std::int32_t> dominant(n, 0);
  dominant[t] = 1;

  const kernels::KernelTable& k = kernels::active();
  bool any_other = false;
  std::int64_t best = 0;
  const auto total = for_each_level(r, dominant, budget, [&](const Frontier& f, bool root) {
    if (root) return;
    best = k.max_dot(f.data.data(), f.stride, f.count, n, weights.data(), any_other ? best : INT64_MIN);
    any_other = true;
  });

  WeightOrbitSummary s;
  s.size = total;
  s.norm2 = gram[t];
  s.max_other_inner = any_other ? Rational(Integer(static_cast<long>(best)), scale) : Rational(0);
  s.max_other_inner.canonicalize();
  return s;
}

Integer group_order(const CoxeterDiagram& d) {
  Integer order = 1;
  for (const ComponentType& t : d.component_types()) order *= facts(t).order;
  return order;
}

std::size_t positive_root_count(const CoxeterDiagram& d) {
  std::size_t count = 0;
  for (const ComponentType& t : d.component_types()) count += facts(t).positive_roots;
  return count;
}

std::vector<Node> longest_word(const Realization& r, const NodeSet& parabolic) {
  const int n = r.rank();
  std::vector<char> in_j(n, 0);
  for (Node j : parabolic) in_j[r.diagram().index_of(j)] = 1;

  // Greedy descent on the labels of rho_J = sum_{j in J} omega_j.
  std::vector<long> labels(n, 0);
  for (int a = 0; a < n; ++a) labels[a] = in_j[a];
  std::vector<Node> applied;
  while (true) {
    int a = 0;
    while (a < n && !(in_j[a] && labels[a] > 0)) ++a;
    if (a == n) break;
    const long k = labels[a];
    for (int b = 0; b < n; ++b) labels[b] -= k * r.cartan_at(a, b);
    applied.push_back(r.diagram().nodes()[a]);
  }
  // v_final = s_{last} ... s_{first} rho_J.
  std::reverse(applied.begin(), applied.end());
  return applied;
}

OrthogonalElement longest_element(const Realization& r, const NodeSet& parabolic) {
  OrthogonalElement g;
  g.word = longest_word(r, parabolic);
  g.matrix = Matrix::identity(r.ambient_dim());
  for (Node i : g.word) g.matrix = g.matrix * r.reflection_matrix_at(r.diagram().index_of(i));
  return g;
}

OrthogonalElement longest_element(const Realization& r) { return longest_element(r, r.diagram().nodes()); }

Permutation opposition(const CoxeterDiagram& d) {
  std::map<Node, Node> images;
  for (const CoxeterDiagram& c : connected_components(d)) {
    const ComponentType t = c.component_types().front();
    if (!t.crystallographic()) {
      if (t.family == Family::I && t.m % 2 == 1) {
        images[c.nodes()[0]] = c.nodes()[1];
        images[c.nodes()[1]] = c.nodes()[0];
      }
      continue;  // H3, H4 and even dihedral: w_0 = -1
    }
    const Realization r = realize(c);
    const std::vector<Node> word = longest_word(r, c.nodes());
    const int n = c.rank();
    // Apply w_0 to each simple root in simple-root coordinates.
    for (int a = 0; a < n; ++a) {
      std::vector<long> beta(n, 0);
      beta[a] = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int j = c.index_of(*it);
        long pairing = 0;
        for (int b = 0; b < n; ++b) pairing += beta[b] * r.cartan_at(b, j);
        beta[j] -= pairing;
      }
      int target = -1;
      for (int b = 0; b < n; ++b) {
        if (beta[b] == -1 && target < 0)
          target = b;
        else if (beta[b] != 0)
          target = -2;
      }
      if (target < 0) throw std::logic_error("w_0 did not map a simple root to a negative simple root");
      images[c.nodes()[a]] = c.nodes()[target];
    }
  }
  return Permutation::from_map(images);
}

long element_order(const OrthogonalElement& g) {
  if (!g.realized()) throw Error(ErrorCode::NonCrystallographic, "element has no matrix realization");
  constexpr long kLimit = 10000;
  Matrix power = g.matrix;
  for (long k = 1; k <= kLimit; ++k) {
    if (power.is_identity()) return k;
    power = power * g.matrix;
  }
  throw Error(ErrorCode::NotSpherical, "element order exceeds " + std::to_string(kLimit));
}

}  // namespace coxangle
