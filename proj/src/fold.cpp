#include "coxangle/fold.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "coxangle/errors.hpp"
#include "coxangle/geometry.hpp"
#include "coxangle/tits.hpp"

namespace coxangle {

namespace {

bool linked(const CoxeterDiagram& d, const NodeSet& j, const NodeSet& k) {
  for (Node a : j)
    for (Node b : k)
      if (d.label(a, b) >= 3) return true;
  return false;
}

OrthogonalElement product(const OrthogonalElement& a, const OrthogonalElement& b) {
  OrthogonalElement out;
  out.matrix = a.matrix * b.matrix;
  out.word = a.word;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

}  // namespace

FoldResult fold(const CoxeterDiagram& d, const AutGroup& g) {
  const std::vector<NodeSet> classes = orbits(d, g);

  FoldResult result{d, {}, {}, {}};
  for (const NodeSet& j : classes) {
    result.orbit_of[j.front()] = j;
    for (Node i : j) result.node_map[i] = j.front();
  }

  // Split into crystallographic nodes (realized) and the rest (analytic).
  NodeSet realized_nodes;
  std::map<Node, CoxeterDiagram> analytic_component;  // node -> its component
  for (const CoxeterDiagram& c : connected_components(d)) {
    if (c.component_types().front().crystallographic()) {
      realized_nodes.insert(realized_nodes.end(), c.nodes().begin(), c.nodes().end());
      continue;
    }
    for (Node i : c.nodes()) analytic_component.emplace(i, c);
  }
  std::sort(realized_nodes.begin(), realized_nodes.end());

  for (const NodeSet& j : classes) {
    const auto it = analytic_component.find(j.front());
    if (it == analytic_component.end()) continue;
    const CoxeterDiagram& c = it->second;
    const bool inside = std::all_of(j.begin(), j.end(), [&](Node x) { return c.contains(x); });
    if (!inside)
      throw Error(ErrorCode::NonCrystallographic,
                  "Gamma moves the non-crystallographic component " + c.type_name() + " onto another component");
    if (j.size() > 1 && c.rank() != 2)
      throw Error(ErrorCode::NonCrystallographic, "cannot fold the non-crystallographic component " + c.type_name());
  }

  std::optional<Realization> r;
  if (!realized_nodes.empty()) r.emplace(realize(restrict(d, realized_nodes)));

  const bool trivial = std::all_of(classes.begin(), classes.end(), [](const NodeSet& j) { return j.size() == 1; });

  for (const NodeSet& j : classes) {
    OrthogonalElement w;
    if (analytic_component.contains(j.front())) {
      if (j.size() == 1) {
        w.word = {j.front()};
      } else {
        // I2(m) with its two nodes swapped: w_J is the longest element, the
        // alternating word of length m.
        const int m = d.label(j[0], j[1]);
        for (int k = 0; k < m; ++k) w.word.push_back(j[k % 2]);
      }
    } else {
      w = longest_element(*r, j);
    }
    result.generators.emplace(j.front(), std::move(w));
  }
  if (trivial) return result;

  std::vector<Edge> entries;
  for (std::size_t x = 0; x < classes.size(); ++x) {
    for (std::size_t y = x + 1; y < classes.size(); ++y) {
      const NodeSet& j = classes[x];
      const NodeSet& k = classes[y];
      if (!linked(d, j, k)) continue;  // generators commute: m = 2
      int m = 2;
      if (analytic_component.contains(j.front())) {
        m = d.label(j.front(), k.front());  // two fixed nodes of one dihedral component
      } else {
        const long order = element_order(product(result.generators.at(j.front()), result.generators.at(k.front())));
        if (order < 2) throw Error(ErrorCode::NotSpherical, "folded generators coincide");
        m = static_cast<int>(order);
      }
      if (m != 2) entries.push_back({j.front(), k.front(), m});
    }
  }
  NodeSet labels;
  for (const NodeSet& j : classes) labels.push_back(j.front());
  result.folded = CoxeterDiagram::create(labels, entries);
  return result;
}

TitsDiagram FoldedTits::as_tits() const { return TitsDiagram{fold.folded, AutGroup{}, anisotropic}; }

FoldedTits fold_tits(const TitsDiagram& t) {
  const ValidationReport report = validate(t);
  if (!report.ok()) throw Error(ErrorCode::InvalidTitsDiagram, "invalid Tits diagram: " + report.summary());
  FoldedTits out{fold(t.diagram, t.gamma), {}};
  std::set<Node> image;
  for (Node a : t.anisotropic) image.insert(out.fold.node_map.at(a));
  out.anisotropic.assign(image.begin(), image.end());
  return out;
}

}  // namespace coxangle
