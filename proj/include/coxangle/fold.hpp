#pragma once

// Folded Coxeter diagram M_Gamma of a diagram under a group of diagram
// automorphisms: one node per Gamma-orbit J, with generator the longest
// element w_J of the parabolic W_J, and edge label the order of w_J w_K.

#include <map>
#include <vector>

#include "coxangle/diagram.hpp"
#include "coxangle/tits_diagram.hpp"
#include "coxangle/weyl.hpp"

namespace coxangle {

struct FoldResult {
  /// Nodes are labelled by the smallest member of their orbit.
  CoxeterDiagram folded;
  std::map<Node, Node> node_map;
  std::map<Node, OrthogonalElement> generators;
  /// Orbit of each folded node, keyed by folded label.
  std::map<Node, NodeSet> orbit_of;
};

/// Throws NotAnAutomorphism, NotSpherical or NonCrystallographic.
FoldResult fold(const CoxeterDiagram& d, const AutGroup& g);

struct FoldedTits {
  FoldResult fold;
  /// Folded labels of the orbits contained in A.
  NodeSet anisotropic;

  /// (M_Gamma, {id}, A~).
  TitsDiagram as_tits() const;
};

/// Folds (M, Gamma) and pushes A through the node map. Throws
/// InvalidTitsDiagram when t fails validation.
FoldedTits fold_tits(const TitsDiagram& t);

}  // namespace coxangle
