#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coxangle/cli/cli.hpp"
#include "coxangle/cli/render.hpp"
#include "coxangle/dsl.hpp"
#include "coxangle/fold.hpp"
#include "coxangle/geometry.hpp"
#include "coxangle/tits.hpp"
#include "coxangle/weyl.hpp"

namespace coxangle::cli {

namespace {

using nlohmann::json;

struct Options {
  Format format = Format::Table;
  std::string file;
  std::string diagram;
  std::vector<std::string> gamma;
  std::optional<int> node;
  std::optional<int> rel_rank;
  std::optional<std::size_t> orbit_budget;
  bool list = false;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t budget(const Options& o) {
  if (o.orbit_budget) return *o.orbit_budget;
  if (const char* env = std::getenv("COXANGLE_ORBIT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("COXANGLE_ORBIT_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultOrbitBudget;
}

// Input either from a file or from --diagram plus optional --gamma cycles.
SpecDocument load(const Options& o) {
  if (!o.file.empty() && !o.diagram.empty()) throw Error(ErrorCode::ParseError, "give either a file or --diagram, not both");
  if (!o.file.empty()) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw IoError("cannot read " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), o.file);
  }
  if (o.diagram.empty()) throw Error(ErrorCode::ParseError, "no input: give a file or --diagram");
  std::string text = "diagram " + o.diagram + "\n";
  for (const std::string& g : o.gamma) text += "gamma " + g + "\n";
  return parse_spec(text, "--diagram");
}

Node require_node(const Options& o) {
  if (!o.node) throw Error(ErrorCode::ParseError, "--node is required");
  return *o.node;
}

void emit(const Options& o, std::ostream& out, const json& j, const Table& t, const std::string& preface = "") {
  switch (o.format) {
    case Format::Json: out << j.dump(2) << "\n"; break;
    case Format::Csv: t.print_csv(out); break;
    case Format::Table:
      out << preface;
      t.print(out);
      break;
  }
}

std::vector<std::string> angle_cells(const Angle& a) {
  char approx[32];
  std::snprintf(approx, sizeof approx, "%.12g", a.radians_approx());
  return {a.to_string(), cos_text(a), pi_text(a), approx};
}

// Commands ------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  const SpecDocument doc = load(o);
  const TitsDiagram t = doc.as_tits();
  const std::vector<NodeSet> iso = isotropic_orbits(t);
  json j = {{"command", "validate"}, {"valid", true}, {"tits", tits_json(t)},
            {"relative_rank", iso.size()}, {"isotropic_orbits", iso}};
  Table table({"type", "gamma", "anisotropic", "isotropic_orbits", "relative_rank", "valid"});
  table.add({t.diagram.type_name(), gamma_text(t.gamma), set_text(t.anisotropic), sets_text(iso),
             std::to_string(iso.size()), "yes"});
  emit(o, out, j, table);
  return kOk;
}

int cmd_angle(const Options& o, std::ostream& out) {
  const SpecDocument doc = load(o);
  const Node i = require_node(o);
  const Angle a = angular_distance(doc.diagram(), i, budget(o));
  json j = angle_json(a);
  j["command"] = "angle";
  j["diagram"] = doc.diagram().type_name();
  j["node"] = i;
  Table table({"type", "node", "angle", "cos", "pi_fraction", "radians_approx"});
  auto row = angle_cells(a);
  row.insert(row.begin(), {doc.diagram().type_name(), std::to_string(i)});
  table.add(row);
  emit(o, out, j, table);
  return kOk;
}

int cmd_min_angle(const Options& o, std::ostream& out) {
  const SpecDocument doc = load(o);
  const TitsDiagram t = doc.as_tits();
  const MinimalAngle m = minimal_angle(t, budget(o));
  const Verdict v = compare_with_pi_over_3(m.angle);

  json per = json::array();
  for (const auto& [orbit, a] : m.per_orbit) per.push_back({{"orbit", orbit}, {"angle", angle_json(a)}});
  json j = {{"command", "min-angle"}, {"tits", tits_json(t)}, {"angle", angle_json(m.angle)},
            {"verdict", verdict_code(v)}, {"attained_by", m.attained_by}, {"per_orbit", per}};

  Table table({"type", "anisotropic", "angle", "cos", "pi_fraction", "radians_approx", "verdict", "attained_by"});
  auto row = angle_cells(m.angle);
  row.insert(row.begin(), {t.diagram.type_name(), set_text(t.anisotropic)});
  row.push_back(verdict_code(v));
  row.push_back(sets_text(m.attained_by));
  table.add(row);
  emit(o, out, j, table);
  return kOk;
}

int cmd_fold(const Options& o, std::ostream& out) {
  const SpecDocument doc = load(o);
  const TitsDiagram t = doc.as_tits();
  const FoldedTits f = doc.is_tits() ? fold_tits(t) : FoldedTits{fold(t.diagram, t.gamma), {}};
  const CoxeterDiagram& m = f.fold.folded;

  json orbits_j = json::array();
  Table table({"folded_node", "orbit", "isotropic", "generator_length"});
  for (Node x : m.nodes()) {
    const NodeSet& orbit = f.fold.orbit_of.at(x);
    const bool iso = !std::binary_search(f.anisotropic.begin(), f.anisotropic.end(), x);
    const std::size_t len = f.fold.generators.at(x).word.size();
    orbits_j.push_back({{"node", x}, {"orbit", orbit}, {"isotropic", iso}, {"generator_length", len}});
    table.add({std::to_string(x), set_text(orbit), iso ? "yes" : "no", std::to_string(len)});
  }
  json j = {{"command", "fold"}, {"source", tits_json(t)}, {"folded", diagram_json(m)},
            {"orbits", orbits_j}, {"anisotropic", f.anisotropic}};
  const std::string preface = t.diagram.type_name() + " folded by " + gamma_text(t.gamma) + ": " + m.type_name() +
                              "\n" + sketch(m) + "\n";
  emit(o, out, j, table, preface);
  return kOk;
}

int cmd_opposition(const Options& o, std::ostream& out) {
  const SpecDocument doc = load(o);
  const CoxeterDiagram& d = doc.diagram();
  const Permutation s = opposition(d);
  json j = {{"command", "opposition"}, {"diagram", diagram_json(d)}, {"involution", s.to_string()},
            {"cycles", s.cycles()}};
  Table table({"type", "involution"});
  table.add({d.type_name(), s.to_string()});
  emit(o, out, j, table);
  return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const SpecDocument doc = load(o);
  const CoxeterDiagram& d = doc.diagram();
  const Node i = require_node(o);
  const Realization r = realize(d);
  const WeightOrbitSummary s = weight_orbit_summary(r, i, budget(o));
  NodeSet rest;
  for (Node x : d.nodes())
    if (x != i) rest.push_back(x);
  const Integer stab = rest.empty() ? Integer(1) : group_order(restrict(d, rest));
  const Integer order = group_order(d);
  const Angle a = angular_distance(d, i, budget(o));

  json j = {{"command", "orbit"},
            {"diagram", diagram_json(d)},
            {"node", i},
            {"size", s.size},
            {"stabilizer_order", stab.get_str()},
            {"group_order", order.get_str()},
            {"norm2", s.norm2.get_str()},
            {"max_other_inner", s.max_other_inner.get_str()},
            {"angle", angle_json(a)}};
  Table table({"type", "node", "orbit_size", "stabilizer_order", "group_order", "norm2", "max_other_inner", "angle"});
  table.add({d.type_name(), std::to_string(i), std::to_string(s.size), stab.get_str(), order.get_str(),
             s.norm2.get_str(), s.max_other_inner.get_str(), a.to_string()});
  std::string listing;
  if (o.list) {
    const Orbit orb = weyl_orbit(r, r.fundamental_weight(i), budget(o));
    json vs = json::array();
    for (std::size_t k = 0; k < orb.size(); ++k) {
      json v = json::array();
      std::string line = " ";
      for (const Rational& x : orb.vector(k)) {
        v.push_back(x.get_str());
        line += " " + x.get_str();
      }
      vs.push_back(v);
      listing += line + "\n";
    }
    j["vectors"] = vs;
  }
  emit(o, out, j, table);
  if (o.list && o.format == Format::Table) out << "\n" << listing;
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const SpecDocument doc = load(o);
  const TitsDiagram base = doc.as_tits();
  const std::vector<IndexRow> rows = enumerate_indices(base.diagram, base.gamma, o.rel_rank, budget(o));

  json items = json::array();
  Table table({"anisotropic", "isotropic_orbits", "relative_rank", "angle", "cos", "pi_fraction", "radians_approx",
               "verdict"});
  for (const IndexRow& row : rows) {
    const std::vector<NodeSet> iso = isotropic_orbits(row.tits);
    items.push_back({{"anisotropic", row.tits.anisotropic},
                     {"isotropic_orbits", iso},
                     {"relative_rank", row.relative_rank},
                     {"angle", angle_json(row.minimal.angle)},
                     {"verdict", verdict_code(row.verdict)}});
    std::vector<std::string> cells = {set_text(row.tits.anisotropic), sets_text(iso), std::to_string(row.relative_rank)};
    for (std::string& c : angle_cells(row.minimal.angle)) cells.push_back(std::move(c));
    cells.push_back(verdict_code(row.verdict));
    table.add(cells);
  }
  json j = {{"command", "enumerate"}, {"diagram", diagram_json(base.diagram)}, {"gamma", tits_json(base)["gamma"]},
            {"rows", items}};
  if (o.rel_rank) j["rel_rank"] = *o.rel_rank;
  emit(o, out, j, table);
  return kOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  json items = json::array();
  Table table({"name", "type", "gamma", "anisotropic", "expected", "computed", "verdict", "status"});
  std::size_t failed = 0;
  for (const CatalogEntry& e : catalog()) {
    const MinimalAngle m = minimal_angle(e.tits, budget(o));
    const Verdict v = compare_with_pi_over_3(m.angle);
    const bool pass = (!e.expected_angle || m.angle == *e.expected_angle) && v == e.expected_verdict;
    if (!pass) ++failed;
    json item = {{"name", e.name},
                 {"description", e.description},
                 {"tits", tits_json(e.tits)},
                 {"computed", angle_json(m.angle)},
                 {"verdict", verdict_code(v)},
                 {"expected_verdict", verdict_code(e.expected_verdict)},
                 {"status", pass ? "PASS" : "FAIL"}};
    if (e.expected_angle) item["expected"] = angle_json(*e.expected_angle);
    items.push_back(item);
    table.add({e.name, e.tits.diagram.type_name(), gamma_text(e.tits.gamma), set_text(e.tits.anisotropic),
               e.expected_angle ? e.expected_angle->to_string() : "-", m.angle.to_string(), verdict_code(v),
               pass ? "PASS" : "FAIL"});
  }
  json j = {{"command", "catalog"}, {"entries", items}, {"passed", items.size() - failed}, {"failed", failed}};
  emit(o, out, j, table);
  return failed ? kCatalogMismatch : kOk;
}

// Errors --------------------------------------------------------------------

int report(const Options& o, std::ostream& out, std::ostream& err, int code, const std::string& name,
           const std::string& message, json extra = json::object()) {
  err << "error: " << message << "\n";
  if (o.format == Format::Json) {
    json e = {{"code", name}, {"message", message}, {"exit_code", code}};
    for (auto& [k, v] : extra.items()) e[k] = v;
    out << json{{"error", e}}.dump(2) << "\n";
  }
  return code;
}

json violations_json(const std::vector<Violation>& vs) {
  json a = json::array();
  for (const Violation& v : vs) a.push_back({{"code", violation_code(v.kind)}, {"orbit", v.orbit}, {"detail", v.detail}});
  return a;
}

// --format is needed before CLI11 has parsed anything, to shape usage errors.
Format sniff_format(const std::vector<std::string>& args) {
  for (std::size_t k = 0; k < args.size(); ++k) {
    std::string v;
    if (args[k] == "--format" && k + 1 < args.size()) v = args[k + 1];
    if (args[k].rfind("--format=", 0) == 0) v = args[k].substr(9);
    if (v == "json") return Format::Json;
    if (v == "csv") return Format::Csv;
  }
  return Format::Table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.format = sniff_format(args);

  CLI::App app{"Minimal angles of spherical Tits diagrams", "coxangle"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h, bool node, bool gamma, bool rel) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "diagram file");
    c->add_option("--diagram", o.diagram, "builtin type, e.g. E6 or A3+B2");
    c->add_option("--format", o.format, "table, json or csv")->transform(CLI::CheckedTransformer(formats));
    c->add_option("--orbit-budget", o.orbit_budget, "largest orbit to enumerate (env COXANGLE_ORBIT_BUDGET)");
    if (node) c->add_option("--node", o.node, "node label");
    if (gamma) c->add_option("--gamma", o.gamma, "automorphism in cycle notation, with --diagram");
    if (rel) c->add_option("--rel-rank", o.rel_rank, "keep only this relative rank");
    commands.emplace_back(c, h);
    return c;
  };
  add("validate", "check a Tits diagram", cmd_validate, false, true, false);
  add("angle", "angular distance at a node", cmd_angle, true, false, false);
  add("min-angle", "minimal angle of a Tits diagram", cmd_min_angle, false, true, false);
  add("fold", "fold a diagram by its automorphisms", cmd_fold, false, true, false);
  add("opposition", "opposition involution", cmd_opposition, false, false, false);
  add("orbit", "orbit of a fundamental weight", cmd_orbit, true, false, false)
      ->add_flag("--list", o.list, "print the orbit vectors");
  add("enumerate", "all valid anisotropic kernels", cmd_enumerate, false, true, true);
  add("catalog", "check the worked examples", cmd_catalog, false, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(o, out, err, kParseError, "UsageError", e.what());
  }

  try {
    for (const auto& [c, h] : commands)
      if (c->parsed()) return h(o, out);
  } catch (const ParseError& e) {
    return report(o, out, err, kParseError, "ParseError", e.what(),
                  {{"file", e.file()}, {"line", e.line()}, {"column", e.column()}});
  } catch (const ValidationError& e) {
    if (commands.front().first->parsed() && o.format == Format::Json) {
      err << "error: " << e.what() << "\n";
      out << json{{"command", "validate"}, {"valid", false}, {"file", e.file()}, {"line", e.line()},
                  {"message", e.reason()}, {"violations", violations_json(e.violations())}}
                 .dump(2)
          << "\n";
      return kDomainError;
    }
    return report(o, out, err, kDomainError, "ValidationError", e.what(),
                  {{"file", e.file()}, {"line", e.line()}, {"column", e.column()},
                   {"violations", violations_json(e.violations())}});
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::ParseError ? kParseError : kDomainError;
    return report(o, out, err, code, std::string(code_name(e.code())), e.what());
  } catch (const IoError& e) {
    return report(o, out, err, kDomainError, "IoError", e.what());
  } catch (const std::invalid_argument& e) {
    return report(o, out, err, kDomainError, "InvalidArgument", e.what());
  }
  return kParseError;
}

}  // namespace coxangle::cli
