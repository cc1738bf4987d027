#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "coxangle/errors.hpp"
#include "coxangle/tits.hpp"
#include "oracle/group_oracle.hpp"

using namespace coxangle;

namespace {

AutGroup gen(std::vector<std::vector<Node>> cycles) { return AutGroup{{Permutation::from_cycles(cycles)}}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

const Angle kRight = Angle::exact_cos(0);
const Angle kThird = Angle::exact_cos(Rational(1, 3));

// Relabels nodes by x -> 100 - 7x (order reversing) throughout a Tits diagram.
TitsDiagram relabel(const TitsDiagram& t) {
  auto f = [](Node x) { return 100 - 7 * x; };
  std::vector<Node> nodes;
  for (Node x : t.diagram.nodes()) nodes.push_back(f(x));
  std::vector<Edge> edges;
  for (const Edge& e : t.diagram.edges()) edges.push_back({f(e.i), f(e.j), e.m});
  AutGroup g;
  for (const Permutation& p : t.gamma.generators) {
    std::map<Node, Node> m;
    for (const auto& [a, b] : p.moved()) m[f(a)] = f(b);
    g.generators.push_back(Permutation::from_map(m));
  }
  NodeSet a;
  for (Node x : t.anisotropic) a.push_back(f(x));
  std::sort(a.begin(), a.end());
  return {CoxeterDiagram::create(nodes, edges), g, a};
}

}  // namespace

TEST_CASE("angular distances of small types") {
  CHECK(angular_distance(builtin("A1"), 1) == Angle::rational_pi(1, 1));
  for (int m = 3; m <= 12; ++m)
    for (Node i : {1, 2}) CHECK(angular_distance(builtin("I2(" + std::to_string(m) + ")"), i) == Angle::rational_pi(2, m));
  CHECK(angular_distance(builtin("A3"), 1) == Angle::exact_cos(Rational(-1, 3)));
  CHECK(angular_distance(builtin("A3"), 2) == kRight);
  CHECK(angular_distance(builtin("A3"), 3) == Angle::exact_cos(Rational(-1, 3)));
  CHECK(angular_distance(builtin("A3"), 1).kind() == Angle::Kind::ExactCos);
}

TEST_CASE("angular distances at the first node of B and D") {
  for (int n = 2; n <= 8; ++n) CHECK(angular_distance(builtin("B" + std::to_string(n)), 1) == kRight);
  for (int n = 4; n <= 8; ++n) CHECK(angular_distance(builtin("D" + std::to_string(n)), 1) == kRight);
}

TEST_CASE("arccos(1/3) cases") {
  CHECK(angular_distance(builtin("A5"), 3) == kThird);
  CHECK(angular_distance(builtin("B3"), 3) == kThird);
  CHECK(angular_distance(builtin("E7"), 7) == kThird);
  // Bourbaki omega_1 of E7 is the highest root: neighbouring roots at pi/3.
  CHECK(angular_distance(builtin("E7"), 1) == Angle::exact_cos(Rational(1, 2)));
}

TEST_CASE("angular distance matches the brute-force group at rank <= 4") {
  for (const std::string name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "F4", "G2"}) {
    const auto a = oracle::cartan(name);
    for (Node i = 1; i <= static_cast<Node>(a.size()); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      CHECK(angular_distance(builtin(name), i) == Angle::exact_cos(oracle::angular_cos(a, i)));
    }
  }
}

TEST_CASE("angular distance only sees the component of the node") {
  CHECK(angular_distance(builtin("A3+B2"), 2) == kRight);
  CHECK(angular_distance(builtin("A3+B2"), 4) == Angle::rational_pi(1, 2));
  CHECK(angular_distance(builtin("H3+A1"), 4) == Angle::rational_pi(1, 1));
  CHECK(code_of([] { angular_distance(builtin("H3"), 1); }) == ErrorCode::NonCrystallographic);
  CHECK(code_of([] { angular_distance(builtin("A3"), 9); }) == ErrorCode::UnknownNode);
  // relabelled A5, middle node
  const auto d = CoxeterDiagram::create({11, 12, 13, 14, 15}, {{11, 12, 3}, {12, 13, 3}, {13, 14, 3}, {14, 15, 3}});
  CHECK(angular_distance(d, 13) == kThird);
}

TEST_CASE("validation reports each kind of violation") {
  CHECK(validate({builtin("A5"), gen({{1, 5}, {2, 4}}), {1, 2, 4, 5}}).ok());
  CHECK(validate(quasi_split(builtin("E8"))).ok());

  const auto bad_gamma = validate({builtin("A5"), gen({{1, 2}}), {}});
  REQUIRE(bad_gamma.violations.size() == 1);
  CHECK(bad_gamma.violations[0].kind == Violation::Kind::GammaNotAutomorphism);
  CHECK(violation_code(bad_gamma.violations[0].kind) == "gamma-not-automorphism");

  const auto not_invariant = validate({builtin("A5"), gen({{1, 5}, {2, 4}}), {1, 2}});
  REQUIRE(!not_invariant.ok());
  CHECK(not_invariant.violations[0].kind == Violation::Kind::AnisotropicNotInvariant);
  CHECK(violation_code(Violation::Kind::AnisotropicNotInvariant) == "A-not-invariant");

  // A3 with node 1 isotropic, A = {2}: opposition of A2 on {1,2} moves 1.
  const auto opp = validate({builtin("A3"), AutGroup{}, {2}});
  REQUIRE(!opp.ok());
  CHECK(opp.violations[0].kind == Violation::Kind::OppositionViolated);
  CHECK(opp.violations[0].orbit == NodeSet{1});
  CHECK(violation_code(Violation::Kind::OppositionViolated) == "opposition-violated");

  CHECK(!validate({builtin("A3"), AutGroup{}, {7}}).ok());
}

TEST_CASE("relative rank and rank-one subdiagrams") {
  const TitsDiagram a7{builtin("A7"), AutGroup{}, {1, 3, 5, 7}};
  CHECK(relative_rank(a7) == 3);
  CHECK(isotropic_orbits(a7) == std::vector<NodeSet>{{2}, {4}, {6}});
  const auto pieces = rank_one_subdiagrams(a7);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[1].diagram.nodes() == NodeSet{1, 3, 4, 5, 7});
  CHECK(pieces[1].anisotropic == NodeSet{1, 3, 5, 7});

  const TitsDiagram a5{builtin("A5"), gen({{1, 5}, {2, 4}}), {1, 2, 4, 5}};
  CHECK(relative_rank(a5) == 1);
  CHECK(code_of([&] { rank_one_subdiagrams(a5); }) == ErrorCode::NontrivialGamma);
  CHECK(code_of([] { relative_rank({builtin("A3"), AutGroup{}, {2}}); }) == ErrorCode::InvalidTitsDiagram);
  CHECK(relative_rank({builtin("E6"), gen({{1, 6}, {3, 5}}), {}}) == 4);
}

TEST_CASE("minimal angles") {
  const MinimalAngle a7 = minimal_angle({builtin("A7"), AutGroup{}, {1, 3, 5, 7}});
  CHECK(a7.angle == kRight);
  CHECK(a7.attained_by.size() == 3);
  CHECK(minimal_angle({builtin("A5"), gen({{1, 5}, {2, 4}}), {1, 2, 4, 5}}).angle == kThird);
  CHECK(minimal_angle({builtin("A5"), gen({{1, 5}, {2, 4}}), {2, 3, 4}}).angle == kRight);
  CHECK(minimal_angle({builtin("B2"), gen({{1, 2}}), {}}).angle == Angle::rational_pi(1, 1));
  CHECK(code_of([] { minimal_angle({builtin("A3"), AutGroup{}, {1, 2, 3}}); }) == ErrorCode::ZeroRelativeRank);
  CHECK(code_of([] { minimal_angle({builtin("A3"), AutGroup{}, {2}}); }) == ErrorCode::InvalidTitsDiagram);
}

TEST_CASE("quasi-split diagrams have minimal angle pi") {
  for (const std::string name : {"A1", "A4", "B5", "C3", "D6", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(9)",
                                 "A2+E6"}) {
    CAPTURE(name);
    const CoxeterDiagram d = builtin(name);
    CHECK(minimal_angle(quasi_split(d)).angle == Angle::rational_pi(1, 1));
    for (const Permutation& p : diagram_automorphisms(d).generators) {
      if (p.is_identity()) continue;
      CHECK(minimal_angle({d, AutGroup{{p}}, {}}).angle == Angle::rational_pi(1, 1));
    }
  }
}

TEST_CASE("enumeration at relative rank 2 finds the pi/3 quadrangles") {
  for (const std::string name : {"E7", "E8"}) {
    const auto rows = enumerate_indices(builtin(name), AutGroup{}, 2);
    CAPTURE(name);
    REQUIRE(!rows.empty());
    bool equal = false;
    for (const IndexRow& r : rows) {
      CHECK(r.relative_rank == 2);
      CHECK(validate(r.tits).ok());
      equal = equal || r.verdict == Verdict::EqualPiOver3;
    }
    CHECK(equal);
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k - 1].tits.anisotropic < rows[k].tits.anisotropic);
  }
}

TEST_CASE("enumeration of a small diagram by hand") {
  // A3, trivial Gamma: only the quasi-split kernel and {1,3} survive the
  // opposition check.
  const auto rows = enumerate_indices(builtin("A3"), AutGroup{});
  std::vector<NodeSet> kernels;
  for (const IndexRow& r : rows) kernels.push_back(r.tits.anisotropic);
  CHECK(kernels == std::vector<NodeSet>{{}, {1, 3}});
  const auto with_flip = enumerate_indices(builtin("A3"), gen({{1, 3}}));
  kernels.clear();
  for (const IndexRow& r : with_flip) kernels.push_back(r.tits.anisotropic);
  CHECK(kernels == std::vector<NodeSet>{{}, {1, 3}, {2}});
}

TEST_CASE("catalog entries reproduce their stated angles") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    REQUIRE(e.expected_angle);
    const MinimalAngle m = minimal_angle(e.tits);
    CHECK(m.angle == *e.expected_angle);
    CHECK(compare_with_pi_over_3(m.angle) == e.expected_verdict);
  }
}

TEST_CASE("minimal angle is invariant under relabelling") {
  std::mt19937 rng(17);
  const std::vector<std::pair<std::string, std::vector<std::vector<Node>>>> sources = {
      {"A5", {{1, 5}, {2, 4}}}, {"E6", {{1, 6}, {3, 5}}}, {"D5", {{4, 5}}}, {"A6", {}}, {"B4", {}}, {"F4", {}}};
  for (const auto& [name, cycles] : sources) {
    const AutGroup g = cycles.empty() ? AutGroup{} : gen(cycles);
    const auto rows = enumerate_indices(builtin(name), g);
    for (int k = 0; k < 4 && !rows.empty(); ++k) {
      const IndexRow& row = rows[rng() % rows.size()];
      const TitsDiagram moved = relabel(row.tits);
      CAPTURE(name);
      REQUIRE(validate(moved).ok());
      CHECK(minimal_angle(moved).angle == row.minimal.angle);
      CHECK(relative_rank(moved) == row.relative_rank);
    }
  }
}

TEST_CASE("per-orbit angles are bounded below by the minimum") {
  const MinimalAngle m = minimal_angle({builtin("E7"), AutGroup{}, {2, 3, 4, 5, 7}});
  CHECK(m.angle == Angle::rational_pi(1, 3));
  for (const auto& [orbit, a] : m.per_orbit) CHECK(a >= m.angle);
  CHECK(!m.attained_by.empty());
}
