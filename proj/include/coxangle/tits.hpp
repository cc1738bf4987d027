#pragma once

// Tits diagrams: validation, relative rank, rank-one subdiagrams, angular
// distance at a node, the minimal angle and its comparison with pi/3,
// exhaustive enumeration of kernels, and the catalog of worked diagrams.

#include <optional>
#include <string>
#include <vector>

#include "coxangle/angle.hpp"
#include "coxangle/diagram.hpp"
#include "coxangle/tits_diagram.hpp"
#include "coxangle/weyl.hpp"

namespace coxangle {

struct Violation {
  enum class Kind { GammaNotAutomorphism, AnisotropicNotInvariant, OppositionViolated };
  Kind kind;
  /// Offending orbit (or the support of the offending generator).
  NodeSet orbit;
  std::string detail;
};

/// "gamma-not-automorphism", "A-not-invariant", "opposition-violated".
std::string violation_code(Violation::Kind k);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks that Gamma acts by automorphisms, A is Gamma-invariant, and each
/// isotropic orbit w is closed under the opposition of the diagram
/// restricted to A u w. Violations are data, never exceptions.
ValidationReport validate(const TitsDiagram& t);

/// Gamma-orbits not contained in A, ordered by smallest member.
std::vector<NodeSet> isotropic_orbits(const TitsDiagram& t);

/// Number of isotropic orbits; throws InvalidTitsDiagram.
int relative_rank(const TitsDiagram& t);

/// One diagram per isotropic node i: restriction to A u {i}. Requires
/// trivial Gamma (NontrivialGamma) and a valid diagram (InvalidTitsDiagram).
std::vector<TitsDiagram> rank_one_subdiagrams(const TitsDiagram& t);

/// Minimal angle between distinct type-i vertices on the Coxeter sphere,
/// computed on the component of i. Throws UnknownNode, NonCrystallographic
/// (H-type component of rank >= 3), OrbitBudgetExceeded.
Angle angular_distance(const CoxeterDiagram& d, Node i, std::size_t budget = kDefaultOrbitBudget);

struct MinimalAngle {
  Angle angle;
  /// Isotropic Gamma-orbits of the original diagram attaining the minimum.
  std::vector<NodeSet> attained_by;
  /// (isotropic orbit, angular distance) for every rank-one subdiagram of the fold.
  std::vector<std::pair<NodeSet, Angle>> per_orbit;
};

/// Fold by Gamma, then minimum of the angular distances over the rank-one
/// subdiagrams. Throws InvalidTitsDiagram or ZeroRelativeRank.
MinimalAngle minimal_angle(const TitsDiagram& t, std::size_t budget = kDefaultOrbitBudget);

Verdict admissibility(const TitsDiagram& t, std::size_t budget = kDefaultOrbitBudget);

struct IndexRow {
  TitsDiagram tits;
  int relative_rank;
  MinimalAngle minimal;
  Verdict verdict;
};

/// Every Gamma-invariant kernel A (other than the whole node set) for which
/// (d, g, A) is valid, optionally filtered by relative rank, sorted by A
/// lexicographically. Combinatorial validity only.
std::vector<IndexRow> enumerate_indices(const CoxeterDiagram& d, const AutGroup& g,
                                        std::optional<int> rel_rank = std::nullopt,
                                        std::size_t budget = kDefaultOrbitBudget);

struct CatalogEntry {
  std::string name;
  std::string description;
  TitsDiagram tits;
  std::optional<Angle> expected_angle;
  Verdict expected_verdict;
};

/// Worked diagrams with their stated minimal angles.
std::vector<CatalogEntry> catalog();

}  // namespace coxangle
