#include "coxangle/tits.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "coxangle/errors.hpp"
#include "coxangle/fold.hpp"
#include "coxangle/geometry.hpp"

namespace coxangle {

bool operator==(const TitsDiagram& a, const TitsDiagram& b) {
  return a.diagram == b.diagram && group_elements(a.gamma) == group_elements(b.gamma) && a.anisotropic == b.anisotropic;
}

TitsDiagram quasi_split(const CoxeterDiagram& d) { return TitsDiagram{d, AutGroup{}, {}}; }

namespace {

std::string join(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

NodeSet merged(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const NodeSet& small, const NodeSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Angular distance of a connected crystallographic type at a Bourbaki node,
// shared across calls. Computing E8 node 4 streams 483840 orbit points, so
// enumeration reuses results by type.
class AngleCache {
 public:
  std::optional<Angle> find(const std::string& type, int node) {
    std::lock_guard lock(mutex_);
    const auto it = cache_.find({type, node});
    if (it == cache_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& type, int node, const Angle& a) {
    std::lock_guard lock(mutex_);
    cache_.emplace(std::make_pair(type, node), a);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::string, int>, Angle> cache_;
};

AngleCache& angle_cache() {
  static AngleCache cache;
  return cache;
}

MinimalAngle minimum_over(std::vector<std::pair<NodeSet, Angle>> per_orbit) {
  MinimalAngle result{per_orbit.front().second, {}, std::move(per_orbit)};
  for (const auto& [orbit, angle] : result.per_orbit)
    if (angle < result.angle) result.angle = angle;
  for (const auto& [orbit, angle] : result.per_orbit)
    if (angle == result.angle) result.attained_by.push_back(orbit);
  return result;
}

}  // namespace

std::string violation_code(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::GammaNotAutomorphism: return "gamma-not-automorphism";
    case Violation::Kind::AnisotropicNotInvariant: return "A-not-invariant";
    case Violation::Kind::OppositionViolated: return "opposition-violated";
  }
  return "?";
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s;
  for (const Violation& v : violations) {
    if (!s.empty()) s += "; ";
    s += violation_code(v.kind) + " " + join(v.orbit) + ": " + v.detail;
  }
  return s;
}

ValidationReport validate(const TitsDiagram& t) {
  ValidationReport report;
  const CoxeterDiagram& d = t.diagram;
  for (const Permutation& p : t.gamma.generators) {
    if (is_automorphism(d, p)) continue;
    NodeSet support;
    for (const auto& kv : p.moved()) support.push_back(kv.first);
    report.violations.push_back({Violation::Kind::GammaNotAutomorphism, support,
                                 p.to_string() + " does not preserve the Coxeter matrix"});
  }
  if (!report.ok()) return report;

  for (Node a : t.anisotropic) {
    if (!d.contains(a))
      report.violations.push_back(
          {Violation::Kind::AnisotropicNotInvariant, {a}, "node " + std::to_string(a) + " is not in the diagram"});
  }
  if (!report.ok()) return report;

  NodeSet kernel = t.anisotropic;
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());

  for (const NodeSet& orbit : orbits(d, t.gamma)) {
    NodeSet inside;
    std::set_intersection(orbit.begin(), orbit.end(), kernel.begin(), kernel.end(), std::back_inserter(inside));
    if (!inside.empty() && inside.size() != orbit.size()) {
      report.violations.push_back({Violation::Kind::AnisotropicNotInvariant, orbit,
                                   "orbit " + join(orbit) + " meets A only in " + join(inside)});
      continue;
    }
    if (!inside.empty()) continue;  // anisotropic orbit

    const CoxeterDiagram sub = restrict(d, merged(kernel, orbit));
    const Permutation sigma = opposition(sub);
    NodeSet image;
    for (Node x : orbit) image.push_back(sigma(x));
    std::sort(image.begin(), image.end());
    if (image != orbit) {
      report.violations.push_back({Violation::Kind::OppositionViolated, orbit,
                                   "opposition " + sigma.to_string() + " of " + sub.type_name() + " on " +
                                       join(sub.nodes()) + " maps " + join(orbit) + " to " + join(image)});
    }
  }
  return report;
}

std::vector<NodeSet> isotropic_orbits(const TitsDiagram& t) {
  std::vector<NodeSet> out;
  NodeSet kernel = t.anisotropic;
  std::sort(kernel.begin(), kernel.end());
  for (const NodeSet& orbit : orbits(t.diagram, t.gamma))
    if (!subset(orbit, kernel)) out.push_back(orbit);
  return out;
}

int relative_rank(const TitsDiagram& t) {
  const ValidationReport report = validate(t);
  if (!report.ok()) throw Error(ErrorCode::InvalidTitsDiagram, "invalid Tits diagram: " + report.summary());
  return static_cast<int>(isotropic_orbits(t).size());
}

std::vector<TitsDiagram> rank_one_subdiagrams(const TitsDiagram& t) {
  if (!t.gamma.trivial())
    throw Error(ErrorCode::NontrivialGamma, "rank-one extraction needs trivial Gamma; fold the diagram first");
  const ValidationReport report = validate(t);
  if (!report.ok()) throw Error(ErrorCode::InvalidTitsDiagram, "invalid Tits diagram: " + report.summary());
  std::vector<TitsDiagram> out;
  for (const NodeSet& orbit : isotropic_orbits(t))
    out.push_back(TitsDiagram{restrict(t.diagram, merged(t.anisotropic, orbit)), AutGroup{}, t.anisotropic});
  return out;
}

Angle angular_distance(const CoxeterDiagram& d, Node i, std::size_t budget) {
  const CoxeterDiagram component = restrict(d, component_of(d, i));
  if (component.rank() == 1) return Angle::rational_pi(1, 1);
  if (component.rank() == 2) return Angle::rational_pi(2, component.label_at(0, 1));

  const auto rec = recognize_connected(component);
  if (!rec->type.crystallographic())
    throw Error(ErrorCode::NonCrystallographic, "angular distance on " + rec->type.name() + " is not supported");
  const int bourbaki =
      static_cast<int>(std::find(rec->bourbaki_to_node.begin(), rec->bourbaki_to_node.end(), i) -
                       rec->bourbaki_to_node.begin()) + 1;
  const std::string type = rec->type.name();
  if (auto cached = angle_cache().find(type, bourbaki)) return *cached;

  const Realization r = realize(builtin(rec->type));
  const WeightOrbitSummary s = weight_orbit_summary(r, bourbaki, budget);
  const Angle a = Angle::exact_cos(s.max_other_inner / s.norm2);
  angle_cache().store(type, bourbaki, a);
  return a;
}

MinimalAngle minimal_angle(const TitsDiagram& t, std::size_t budget) {
  if (relative_rank(t) == 0)
    throw Error(ErrorCode::ZeroRelativeRank, "the anisotropic kernel is the whole diagram; no minimal angle");
  const FoldedTits folded = fold_tits(t);
  const CoxeterDiagram& m = folded.fold.folded;

  std::vector<std::pair<NodeSet, Angle>> per_orbit;
  for (Node i : m.nodes()) {
    if (std::binary_search(folded.anisotropic.begin(), folded.anisotropic.end(), i)) continue;
    const CoxeterDiagram sub = restrict(m, merged(folded.anisotropic, {i}));
    per_orbit.emplace_back(folded.fold.orbit_of.at(i), angular_distance(sub, i, budget));
  }
  return minimum_over(std::move(per_orbit));
}

Verdict admissibility(const TitsDiagram& t, std::size_t budget) {
  return compare_with_pi_over_3(minimal_angle(t, budget).angle);
}

std::vector<IndexRow> enumerate_indices(const CoxeterDiagram& d, const AutGroup& g, std::optional<int> rel_rank,
                                        std::size_t budget) {
  const std::vector<NodeSet> classes = orbits(d, g);
  const std::size_t k = classes.size();
  if (k > 24) throw Error(ErrorCode::RankOutOfRange, "too many Gamma-orbits to enumerate (" + std::to_string(k) + ")");

  std::vector<IndexRow> rows;
  const std::uint64_t all = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t mask = 0; mask < all; ++mask) {
    const int rr = static_cast<int>(k) - __builtin_popcountll(mask);
    if (rel_rank && rr != *rel_rank) continue;
    NodeSet kernel;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) kernel.insert(kernel.end(), classes[b].begin(), classes[b].end());
    std::sort(kernel.begin(), kernel.end());
    TitsDiagram t{d, g, kernel};
    if (!validate(t).ok()) continue;
    MinimalAngle m = minimal_angle(t, budget);
    const Verdict v = compare_with_pi_over_3(m.angle);
    rows.push_back(IndexRow{std::move(t), rr, std::move(m), v});
  }
  std::sort(rows.begin(), rows.end(),
            [](const IndexRow& a, const IndexRow& b) { return a.tits.anisotropic < b.tits.anisotropic; });
  return rows;
}

std::vector<CatalogEntry> catalog() {
  const Angle pi = Angle::rational_pi(1, 1);
  const Angle right = Angle::exact_cos(0);
  const Angle third = Angle::exact_cos(Rational(1, 3));
  const Angle sixty = Angle::exact_cos(Rational(1, 2));
  const AutGroup trivial{};
  auto flip = [](std::vector<std::vector<Node>> cycles) { return AutGroup{{Permutation::from_cycles(cycles)}}; };
  auto entry = [](std::string name, std::string description, TitsDiagram t, Angle expected) {
    const Verdict v = compare_with_pi_over_3(expected);
    return CatalogEntry{std::move(name), std::move(description), std::move(t), expected, v};
  };

  std::vector<CatalogEntry> out;
  out.push_back(entry("b2-swap-quasi-split", "B2 with the node swap, empty kernel; folds to A1",
                      {builtin("B2"), flip({{1, 2}}), {}}, pi));
  out.push_back(entry("a5-flip-end-orbit", "A5 with the flip, isotropic orbit {1,5}; folds to B3 isotropic at the single-bond end",
                      {builtin("A5"), flip({{1, 5}, {2, 4}}), {2, 3, 4}}, right));
  out.push_back(entry("a7-alternating", "A7, kernel {1,3,5,7}; every rank-one piece reduces to A3 middle node",
                      {builtin("A7"), trivial, {1, 3, 5, 7}}, right));
  out.push_back(entry("a3-middle", "A3 with the middle node isotropic", {builtin("A3"), trivial, {1, 3}}, right));
  for (int n = 2; n <= 8; ++n) {
    const std::string b = "B" + std::to_string(n);
    NodeSet rest;
    for (int k = 2; k <= n; ++k) rest.push_back(k);
    out.push_back(entry("b" + std::to_string(n) + "-first-node", b + " with node 1 isotropic", {builtin(b), trivial, rest}, right));
  }
  for (int n = 4; n <= 8; ++n) {
    const std::string dn = "D" + std::to_string(n);
    NodeSet rest;
    for (int k = 2; k <= n; ++k) rest.push_back(k);
    out.push_back(entry("d" + std::to_string(n) + "-first-node", dn + " with node 1 isotropic", {builtin(dn), trivial, rest}, right));
  }
  out.push_back(entry("a5-middle", "A5 with node 3 isotropic; vertices are permutations of (1,1,1,-1,-1,-1)",
                      {builtin("A5"), trivial, {1, 2, 4, 5}}, third));
  out.push_back(entry("e7-node7", "E7 with node 7 isotropic, kernel E6; 56 minuscule vertices",
                      {builtin("E7"), trivial, {1, 2, 3, 4, 5, 6}}, third));
  out.push_back(entry("b3-short-end", "B3 with node 3 (double-bond end) isotropic; vertices are the cube (+-1/2,+-1/2,+-1/2)",
                      {builtin("B3"), trivial, {1, 2}}, third));
  out.push_back(entry("a5-flip-middle", "A5 with the flip, node 3 isotropic; folds to b3-short-end",
                      {builtin("A5"), flip({{1, 5}, {2, 4}}), {1, 2, 4, 5}}, third));
  out.push_back(entry("e7-d4-kernel", "E7 with isotropic nodes {1,6,7}, kernel D4 on {2,3,4,5}",
                      {builtin("E7"), trivial, {2, 3, 4, 5}}, right));
  out.push_back(entry("triangle-e6", "E6 with isotropic nodes {1,6}, kernel D4 (generalized triangle)",
                      {builtin("E6"), trivial, {2, 3, 4, 5}}, right));
  out.push_back(entry("quadrangle-f4", "F4 with isotropic nodes {1,4}, kernel B2 (generalized quadrangle)",
                      {builtin("F4"), trivial, {2, 3}}, right));
  out.push_back(entry("quadrangle-2e6", "E6 with the flip, isotropic orbits {2} and {1,6}, kernel A3 on {3,4,5}",
                      {builtin("E6"), flip({{1, 6}, {3, 5}}), {3, 4, 5}}, right));
  out.push_back(entry("hexagon-2e6", "E6 with the flip, isotropic orbits {2} and {4}",
                      {builtin("E6"), flip({{1, 6}, {3, 5}}), {1, 3, 5, 6}}, third));
  out.push_back(entry("hexagon-e6", "E6 with isotropic nodes {2,4}", {builtin("E6"), trivial, {1, 3, 5, 6}}, third));
  out.push_back(entry("hexagon-e8", "E8 with isotropic nodes {7,8}, kernel E6", {builtin("E8"), trivial, {1, 2, 3, 4, 5, 6}}, third));
  out.push_back(entry("quadrangle-e7", "E7 with isotropic nodes {1,6}, kernel D4+A1 on {2,3,4,5,7}",
                      {builtin("E7"), trivial, {2, 3, 4, 5, 7}}, sixty));
  out.push_back(entry("quadrangle-e8", "E8 with isotropic nodes {1,8}, kernel D6 on {2,...,7}",
                      {builtin("E8"), trivial, {2, 3, 4, 5, 6, 7}}, sixty));
  return out;
}

}  // namespace coxangle
