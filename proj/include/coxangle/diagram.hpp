#pragma once

// Spherical Coxeter diagrams over arbitrary positive-integer node labels,
// the finite-type recognizer, builtin Bourbaki families, and diagram
// automorphisms.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxangle {

using Node = int;

/// Sorted, duplicate-free list of node labels.
using NodeSet = std::vector<Node>;

struct Edge {
  Node i;
  Node j;
  int m;
};

enum class Family { A, B, D, E, F, G, H, I };

/// Finite type of one connected component. Dihedral labels 3, 4, 6 are
/// reported as A2, B2, G2; `m` is only meaningful for family I.
struct ComponentType {
  Family family;
  int rank;
  int m = 0;

  bool crystallographic() const { return family != Family::H && family != Family::I; }
  std::string name() const;

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

class CoxeterDiagram {
 public:
  /// Validates and builds a diagram; unlisted off-diagonal pairs get m = 2.
  /// Throws DuplicateLabel, InvalidEntry or NotSpherical.
  static CoxeterDiagram create(std::vector<Node> nodes, const std::vector<Edge>& entries);

  const NodeSet& nodes() const { return nodes_; }
  int rank() const { return static_cast<int>(nodes_.size()); }
  bool contains(Node i) const;

  /// Position of `i` in nodes(); throws UnknownNode.
  int index_of(Node i) const;

  /// m_ij (1 on the diagonal). Throws UnknownNode.
  int label(Node i, Node j) const;
  int label_at(int a, int b) const { return matrix_[a * rank() + b]; }

  /// Edges with m >= 3, i < j, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Component types, one per connected component, ordered by smallest label.
  const std::vector<ComponentType>& component_types() const { return types_; }
  bool crystallographic() const;

  /// e.g. "A3+B2"; components ordered by smallest label.
  std::string type_name() const;

  friend bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b) {
    return a.nodes_ == b.nodes_ && a.matrix_ == b.matrix_;
  }

 private:
  friend struct DiagramAccess;
  CoxeterDiagram() = default;

  NodeSet nodes_;
  std::vector<int> matrix_;
  std::vector<ComponentType> types_;
};

/// Builtin diagram with Bourbaki labels; "A2+A2" style sums shift labels.
/// Throws UnknownType or RankOutOfRange.
CoxeterDiagram builtin(const std::string& name);

/// Builtin diagram of a single recognised component type.
CoxeterDiagram builtin(const ComponentType& type);

std::vector<CoxeterDiagram> connected_components(const CoxeterDiagram& d);

/// Node set of the connected component containing `i`.
NodeSet component_of(const CoxeterDiagram& d, Node i);

/// Induced subdiagram; throws UnknownNode.
CoxeterDiagram restrict(const CoxeterDiagram& d, const NodeSet& keep);

/// Finite type of a connected diagram together with the isomorphism from the
/// Bourbaki labels 1..rank of that type onto the diagram's own labels.
struct Recognition {
  ComponentType type;
  std::vector<Node> bourbaki_to_node;  // index k-1 holds the image of Bourbaki node k
};

/// Empty when the connected diagram is not of finite type.
std::optional<Recognition> recognize_connected(const CoxeterDiagram& connected);

/// Label-preserving bijections `from` -> `to`, as position maps.
std::vector<std::vector<int>> isomorphisms(const CoxeterDiagram& from, const CoxeterDiagram& to,
                                           std::size_t limit = 0);

/// Node permutation; points not listed are fixed.
class Permutation {
 public:
  Permutation() = default;

  /// Disjoint-cycle constructor, e.g. {{1, 5}, {2, 4}}. Throws InvalidEntry
  /// when a label repeats.
  static Permutation from_cycles(const std::vector<std::vector<Node>>& cycles);
  static Permutation from_map(const std::map<Node, Node>& images);

  Node operator()(Node i) const;
  bool is_identity() const { return moved_.empty(); }
  const std::map<Node, Node>& moved() const { return moved_; }

  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  std::vector<std::vector<Node>> cycles() const;
  /// "(1 5)(2 4)", or "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::map<Node, Node> moved_;
};

/// Subgroup of diagram automorphisms given by generators.
struct AutGroup {
  std::vector<Permutation> generators;

  bool trivial() const;
};

bool is_automorphism(const CoxeterDiagram& d, const Permutation& p);

/// Full automorphism group of d as an explicit element list (identity first).
AutGroup diagram_automorphisms(const CoxeterDiagram& d);

/// All elements of the group generated by g (closure), sorted, identity first.
std::vector<Permutation> group_elements(const AutGroup& g);

/// Orbit partition of the nodes, ordered by smallest member. Throws
/// NotAnAutomorphism when a generator does not preserve the matrix.
std::vector<NodeSet> orbits(const CoxeterDiagram& d, const AutGroup& g);

}  // namespace coxangle
