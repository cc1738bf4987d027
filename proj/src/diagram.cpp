#include "coxangle/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "coxangle/errors.hpp"

namespace coxangle {

struct DiagramAccess {
  // Builds the matrix without running the finite-type recognizer. Used for
  // the builtin templates the recognizer itself matches against.
  static CoxeterDiagram raw(NodeSet nodes, const std::vector<Edge>& entries) {
    CoxeterDiagram d;
    const int n = static_cast<int>(nodes.size());
    d.nodes_ = std::move(nodes);
    d.matrix_.assign(static_cast<std::size_t>(n) * n, 2);
    for (int a = 0; a < n; ++a) d.matrix_[a * n + a] = 1;
    for (const Edge& e : entries) {
      const int a = d.index_of(e.i);
      const int b = d.index_of(e.j);
      d.matrix_[a * n + b] = e.m;
      d.matrix_[b * n + a] = e.m;
    }
    return d;
  }

  static void set_types(CoxeterDiagram& d, std::vector<ComponentType> types) { d.types_ = std::move(types); }
};

namespace {

std::vector<Edge> template_edges(const ComponentType& t) {
  std::vector<Edge> e;
  const int n = t.rank;
  auto chain = [&](int from, int to) {
    for (int k = from; k < to; ++k) e.push_back({k, k + 1, 3});
  };
  switch (t.family) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n - 1);
      e.push_back({n - 1, n, 4});
      break;
    case Family::D:
      chain(1, n - 1);
      e.push_back({n - 2, n, 3});
      break;
    case Family::E:
      e.push_back({1, 3, 3});
      chain(3, n);
      e.push_back({2, 4, 3});
      break;
    case Family::F:
      e = {{1, 2, 3}, {2, 3, 4}, {3, 4, 3}};
      break;
    case Family::G:
      e = {{1, 2, 6}};
      break;
    case Family::H:
      e.push_back({1, 2, 5});
      chain(2, n);
      break;
    case Family::I:
      e = {{1, 2, t.m}};
      break;
  }
  return e;
}

CoxeterDiagram template_diagram(const ComponentType& t) {
  NodeSet nodes(t.rank);
  std::iota(nodes.begin(), nodes.end(), 1);
  return DiagramAccess::raw(std::move(nodes), template_edges(t));
}

std::vector<ComponentType> candidates(int rank) {
  std::vector<ComponentType> c;
  if (rank == 1) return {{Family::A, 1}};
  c.push_back({Family::A, rank});
  c.push_back({Family::B, rank});
  if (rank >= 4) c.push_back({Family::D, rank});
  if (rank >= 6 && rank <= 8) c.push_back({Family::E, rank});
  if (rank == 4) c.push_back({Family::F, 4});
  if (rank == 3 || rank == 4) c.push_back({Family::H, rank});
  return c;
}

// Position lists of each connected component, ordered by smallest label.
std::vector<std::vector<int>> component_positions(const CoxeterDiagram& d) {
  const int n = d.rank();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      comp.push_back(a);
      for (int b = 0; b < n; ++b) {
        if (!seen[b] && d.label_at(a, b) >= 3) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Sorted multiset of incident edge labels; an isomorphism invariant.
std::vector<int> signature(const CoxeterDiagram& d, int a) {
  std::vector<int> s;
  for (int b = 0; b < d.rank(); ++b)
    if (b != a && d.label_at(a, b) >= 3) s.push_back(d.label_at(a, b));
  std::sort(s.begin(), s.end());
  return s;
}

ComponentType canonical_dihedral(int m) {
  switch (m) {
    case 3: return {Family::A, 2};
    case 4: return {Family::B, 2};
    case 6: return {Family::G, 2};
    default: return {Family::I, 2, m};
  }
}

}  // namespace

std::string ComponentType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F4";
    case Family::G: return "G2";
    case Family::H: return "H" + std::to_string(rank);
    case Family::I: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

std::vector<std::vector<int>> isomorphisms(const CoxeterDiagram& from, const CoxeterDiagram& to,
                                           std::size_t limit) {
  std::vector<std::vector<int>> found;
  const int n = from.rank();
  if (n != to.rank()) return found;

  // Visit nodes component by component in BFS order, so every node after
  // the first of its component is constrained by an assigned neighbour.
  std::vector<int> order;
  for (const auto& comp : component_positions(from)) {
    std::vector<int> seen(n, 0);
    std::deque<int> queue{comp.front()};
    seen[comp.front()] = 1;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      order.push_back(a);
      for (int b : comp)
        if (!seen[b] && from.label_at(a, b) >= 3) {
          seen[b] = 1;
          queue.push_back(b);
        }
    }
  }

  std::vector<std::vector<int>> from_sig(n), to_sig(n);
  for (int a = 0; a < n; ++a) {
    from_sig[a] = signature(from, a);
    to_sig[a] = signature(to, a);
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) {
      found.push_back(image);
      return limit != 0 && found.size() >= limit;
    }
    const int a = order[depth];
    for (int c = 0; c < n; ++c) {
      if (used[c] || from_sig[a] != to_sig[c]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const int b = order[k];
        ok = from.label_at(a, b) == to.label_at(c, image[b]);
      }
      if (!ok) continue;
      image[a] = c;
      used[c] = 1;
      if (extend(depth + 1)) return true;
      used[c] = 0;
      image[a] = -1;
    }
    return false;
  };
  extend(0);
  return found;
}

std::optional<Recognition> recognize_connected(const CoxeterDiagram& d) {
  const int n = d.rank();
  if (n == 0) return std::nullopt;
  if (n == 2) {
    const int m = d.label_at(0, 1);
    if (m < 3) return std::nullopt;
    return Recognition{canonical_dihedral(m), {d.nodes()[0], d.nodes()[1]}};
  }
  for (const ComponentType& t : candidates(n)) {
    const CoxeterDiagram tmpl = template_diagram(t);
    auto maps = isomorphisms(tmpl, d, 1);
    if (maps.empty()) continue;
    Recognition r{t, {}};
    for (int k = 0; k < n; ++k) r.bourbaki_to_node.push_back(d.nodes()[maps.front()[k]]);
    return r;
  }
  return std::nullopt;
}

CoxeterDiagram CoxeterDiagram::create(std::vector<Node> nodes, const std::vector<Edge>& entries) {
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] < 1) throw Error(ErrorCode::InvalidEntry, "node labels must be positive integers");
    if (k > 0 && nodes[k] == nodes[k - 1])
      throw Error(ErrorCode::DuplicateLabel, "duplicate node label " + std::to_string(nodes[k]));
  }
  std::set<std::pair<Node, Node>> listed;
  for (const Edge& e : entries) {
    if (e.i == e.j) throw Error(ErrorCode::InvalidEntry, "diagonal entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") listed");
    if (e.m < 2)
      throw Error(ErrorCode::InvalidEntry,
                  "entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") has m = " + std::to_string(e.m) + " < 2");
    if (!std::binary_search(nodes.begin(), nodes.end(), e.i) || !std::binary_search(nodes.begin(), nodes.end(), e.j))
      throw Error(ErrorCode::UnknownNode, "entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") names an unknown node");
    const auto key = std::minmax(e.i, e.j);
    if (!listed.insert(key).second)
      throw Error(ErrorCode::InvalidEntry, "entry (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") listed twice");
  }
  CoxeterDiagram d = DiagramAccess::raw(std::move(nodes), entries);

  std::vector<ComponentType> types;
  for (const auto& comp : component_positions(d)) {
    NodeSet labels;
    for (int a : comp) labels.push_back(d.nodes_[a]);
    std::vector<Edge> sub;
    for (std::size_t x = 0; x < comp.size(); ++x)
      for (std::size_t y = x + 1; y < comp.size(); ++y)
        if (const int m = d.label_at(comp[x], comp[y]); m != 2) sub.push_back({labels[x], labels[y], m});
    const auto rec = recognize_connected(DiagramAccess::raw(labels, sub));
    if (!rec) {
      std::ostringstream msg;
      msg << "component {";
      for (std::size_t k = 0; k < labels.size(); ++k) msg << (k ? "," : "") << labels[k];
      msg << "} is not of finite type";
      throw Error(ErrorCode::NotSpherical, msg.str());
    }
    types.push_back(rec->type);
  }
  DiagramAccess::set_types(d, std::move(types));
  return d;
}

bool CoxeterDiagram::contains(Node i) const { return std::binary_search(nodes_.begin(), nodes_.end(), i); }

int CoxeterDiagram::index_of(Node i) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), i);
  if (it == nodes_.end() || *it != i) throw Error(ErrorCode::UnknownNode, "unknown node " + std::to_string(i));
  return static_cast<int>(it - nodes_.begin());
}

int CoxeterDiagram::label(Node i, Node j) const { return label_at(index_of(i), index_of(j)); }

std::vector<Edge> CoxeterDiagram::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (label_at(a, b) >= 3) out.push_back({nodes_[a], nodes_[b], label_at(a, b)});
  return out;
}

bool CoxeterDiagram::crystallographic() const {
  return std::all_of(types_.begin(), types_.end(), [](const ComponentType& t) { return t.crystallographic(); });
}

std::string CoxeterDiagram::type_name() const {
  std::string s;
  for (const ComponentType& t : types_) s += (s.empty() ? "" : "+") + t.name();
  return s.empty() ? "empty" : s;
}

CoxeterDiagram builtin(const ComponentType& type) {
  const ComponentType t = type.family == Family::I ? canonical_dihedral(type.m) : type;
  if (t.family == Family::I && t.m == 2) return builtin("I2(2)");
  NodeSet nodes(t.rank);
  std::iota(nodes.begin(), nodes.end(), 1);
  return CoxeterDiagram::create(nodes, template_edges(t));
}

CoxeterDiagram builtin(const std::string& name) {
  static const std::regex plain(R"(^\s*([A-Za-z])\s*(\d+)\s*$)");
  static const std::regex dihedral(R"(^\s*I\s*2\s*\(\s*(\d+)\s*\)\s*$)");

  NodeSet nodes;
  std::vector<Edge> edges;
  std::size_t start = 0;
  int offset = 0;
  while (true) {
    const std::size_t plus = name.find('+', start);
    const std::string part = name.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    ComponentType t{Family::A, 0};
    if (std::regex_match(part, m, dihedral)) {
      const long mm = std::stol(m[1].str());
      if (mm < 2 || mm > 1000000) throw Error(ErrorCode::RankOutOfRange, "I2(m) needs m >= 2, got '" + part + "'");
      t = {Family::I, 2, static_cast<int>(mm)};
    } else if (std::regex_match(part, m, plain)) {
      const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
      const std::string digits = m[2].str();
      if (digits.size() > 6) throw Error(ErrorCode::RankOutOfRange, "rank out of range in '" + part + "'");
      const int n = std::stoi(digits);
      auto need = [&](bool ok) {
        if (!ok) throw Error(ErrorCode::RankOutOfRange, "rank out of range in '" + part + "'");
      };
      switch (letter) {
        case 'A': need(n >= 1); t = {Family::A, n}; break;
        case 'B':
        case 'C': need(n >= 2); t = {Family::B, n}; break;
        case 'D': need(n >= 4); t = {Family::D, n}; break;
        case 'E': need(n >= 6 && n <= 8); t = {Family::E, n}; break;
        case 'F': need(n == 4); t = {Family::F, 4}; break;
        case 'G': need(n == 2); t = {Family::G, 2}; break;
        case 'H': need(n == 3 || n == 4); t = {Family::H, n}; break;
        default: throw Error(ErrorCode::UnknownType, "unknown diagram type '" + part + "'");
      }
    } else {
      throw Error(ErrorCode::UnknownType, "unknown diagram type '" + part + "'");
    }
    const int rank = t.rank;
    for (int k = 1; k <= rank; ++k) nodes.push_back(offset + k);
    for (const Edge& e : template_edges(t)) edges.push_back({e.i + offset, e.j + offset, e.m});
    offset += rank;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return CoxeterDiagram::create(nodes, edges);
}

std::vector<CoxeterDiagram> connected_components(const CoxeterDiagram& d) {
  std::vector<CoxeterDiagram> out;
  for (const auto& comp : component_positions(d)) {
    NodeSet keep;
    for (int a : comp) keep.push_back(d.nodes()[a]);
    out.push_back(restrict(d, keep));
  }
  return out;
}

NodeSet component_of(const CoxeterDiagram& d, Node i) {
  const int target = d.index_of(i);
  for (const auto& comp : component_positions(d)) {
    if (std::find(comp.begin(), comp.end(), target) == comp.end()) continue;
    NodeSet keep;
    for (int a : comp) keep.push_back(d.nodes()[a]);
    return keep;
  }
  return {i};
}

CoxeterDiagram restrict(const CoxeterDiagram& d, const NodeSet& keep) {
  NodeSet sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> pos;
  for (Node i : sorted) pos.push_back(d.index_of(i));
  std::vector<Edge> entries;
  for (std::size_t x = 0; x < pos.size(); ++x)
    for (std::size_t y = x + 1; y < pos.size(); ++y)
      if (const int m = d.label_at(pos[x], pos[y]); m != 2) entries.push_back({sorted[x], sorted[y], m});
  return CoxeterDiagram::create(sorted, entries);
}

// ---------------------------------------------------------------------------
// Permutations and automorphisms

Permutation Permutation::from_cycles(const std::vector<std::vector<Node>>& cycles) {
  std::map<Node, Node> images;
  std::set<Node> seen;
  for (const auto& cycle : cycles) {
    for (Node x : cycle)
      if (!seen.insert(x).second)
        throw Error(ErrorCode::InvalidEntry, "label " + std::to_string(x) + " repeats in cycle notation");
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return from_map(images);
}

Permutation Permutation::from_map(const std::map<Node, Node>& images) {
  Permutation p;
  std::set<Node> targets;
  for (const auto& [from, to] : images) {
    if (!targets.insert(to).second) throw Error(ErrorCode::InvalidEntry, "map is not injective");
    if (from != to) p.moved_[from] = to;
  }
  for (const auto& [from, to] : p.moved_)
    if (!p.moved_.contains(to)) throw Error(ErrorCode::InvalidEntry, "map is not a permutation of its support");
  return p;
}

Node Permutation::operator()(Node i) const {
  const auto it = moved_.find(i);
  return it == moved_.end() ? i : it->second;
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::map<Node, Node> images;
  std::set<Node> support;
  for (const auto& kv : moved_) support.insert(kv.first);
  for (const auto& kv : other.moved_) support.insert(kv.first);
  for (Node x : support) images[x] = (*this)(other(x));
  return from_map(images);
}

Permutation Permutation::inverse() const {
  std::map<Node, Node> images;
  for (const auto& [from, to] : moved_) images[to] = from;
  Permutation p;
  p.moved_ = std::move(images);
  return p;
}

std::vector<std::vector<Node>> Permutation::cycles() const {
  std::vector<std::vector<Node>> out;
  std::set<Node> done;
  for (const auto& kv : moved_) {
    if (done.contains(kv.first)) continue;
    std::vector<Node> cycle;
    Node x = kv.first;
    do {
      cycle.push_back(x);
      done.insert(x);
      x = (*this)(x);
    } while (x != kv.first);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  if (is_identity()) return "()";
  std::string s;
  for (const auto& cycle : cycles()) {
    s += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) s += (k ? " " : "") + std::to_string(cycle[k]);
    s += ')';
  }
  return s;
}

bool AutGroup::trivial() const {
  return std::all_of(generators.begin(), generators.end(), [](const Permutation& p) { return p.is_identity(); });
}

bool is_automorphism(const CoxeterDiagram& d, const Permutation& p) {
  for (const auto& [from, to] : p.moved())
    if (!d.contains(from) || !d.contains(to)) return false;
  for (Node i : d.nodes())
    for (Node j : d.nodes())
      if (d.label(p(i), p(j)) != d.label(i, j)) return false;
  return true;
}

AutGroup diagram_automorphisms(const CoxeterDiagram& d) {
  AutGroup g;
  for (const auto& image : isomorphisms(d, d)) {
    std::map<Node, Node> m;
    for (int a = 0; a < d.rank(); ++a) m[d.nodes()[a]] = d.nodes()[image[a]];
    g.generators.push_back(Permutation::from_map(m));
  }
  std::sort(g.generators.begin(), g.generators.end(), [](const Permutation& a, const Permutation& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    return a < b;
  });
  return g;
}

std::vector<Permutation> group_elements(const AutGroup& g) {
  std::set<Permutation> elements{Permutation{}};
  std::deque<Permutation> queue{Permutation{}};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const Permutation& s : g.generators) {
      Permutation y = s * x;
      if (elements.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {elements.begin(), elements.end()};  // identity sorts first (empty map)
}

std::vector<NodeSet> orbits(const CoxeterDiagram& d, const AutGroup& g) {
  for (const Permutation& p : g.generators)
    if (!is_automorphism(d, p))
      throw Error(ErrorCode::NotAnAutomorphism, p.to_string() + " is not an automorphism of " + d.type_name());

  std::map<Node, Node> parent;
  for (Node i : d.nodes()) parent[i] = i;
  std::function<Node(Node)> find = [&](Node x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Permutation& p : g.generators)
    for (const auto& [from, to] : p.moved()) {
      const Node a = find(from), b = find(to);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<Node, NodeSet> classes;
  for (Node i : d.nodes()) classes[find(i)].push_back(i);
  std::vector<NodeSet> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace coxangle
