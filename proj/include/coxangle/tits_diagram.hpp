#pragma once

#include "coxangle/diagram.hpp"

namespace coxangle {

/// Spherical Tits diagram (M, Gamma, A): a diagram, a group of diagram
/// automorphisms and the anisotropic kernel A (sorted).
struct TitsDiagram {
  CoxeterDiagram diagram;
  AutGroup gamma;
  NodeSet anisotropic;
};

bool operator==(const TitsDiagram& a, const TitsDiagram& b);

/// Quasi-split diagram: trivial Gamma, empty kernel.
TitsDiagram quasi_split(const CoxeterDiagram& d);

}  // namespace coxangle
