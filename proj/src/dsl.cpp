#include "coxangle/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace coxangle {

namespace {

std::string located(const std::string& file, int line, int column, const std::string& message) {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

struct Token {
  std::string text;
  int column;  // 1-based
};

class Line {
 public:
  Line(const std::string& file, int number, std::string text) : file_(file), number_(number), text_(std::move(text)) {}

  [[noreturn]] void fail(int column, const std::string& message) const {
    throw ParseError(file_, number_, column, message);
  }

  std::vector<Token> words(std::size_t from = 0) const {
    std::vector<Token> out;
    std::size_t k = from;
    while (k < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[k]))) {
        ++k;
        continue;
      }
      const std::size_t start = k;
      while (k < text_.size() && !std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
      out.push_back({text_.substr(start, k - start), static_cast<int>(start) + 1});
    }
    return out;
  }

  Node integer(const Token& t) const {
    Node value = 0;
    const char* end = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end) fail(t.column, "expected an integer, got '" + t.text + "'");
    return value;
  }

  std::vector<Node> integers(const std::vector<Token>& ts, std::size_t from) const {
    std::vector<Node> out;
    for (std::size_t k = from; k < ts.size(); ++k) out.push_back(integer(ts[k]));
    return out;
  }

  // "(1 5)(2 4)" with free whitespace; "()" is the identity.
  std::vector<std::vector<Node>> cycles(std::size_t from) const {
    std::vector<std::vector<Node>> out;
    std::size_t k = from;
    auto skip = [&] {
      while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
    };
    skip();
    if (k == text_.size()) fail(static_cast<int>(k) + 1, "gamma needs at least one cycle");
    while (k < text_.size()) {
      if (text_[k] != '(') fail(static_cast<int>(k) + 1, "expected '(' to open a cycle");
      ++k;
      std::vector<Node> cycle;
      for (;;) {
        skip();
        if (k == text_.size()) fail(static_cast<int>(k) + 1, "unterminated cycle");
        if (text_[k] == ')') {
          ++k;
          break;
        }
        const std::size_t start = k;
        while (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) ++k;
        if (k == start) fail(static_cast<int>(k) + 1, std::string("unexpected '") + text_[k] + "' in cycle");
        cycle.push_back(integer({text_.substr(start, k - start), static_cast<int>(start) + 1}));
      }
      if (cycle.size() > 1) out.push_back(std::move(cycle));
      skip();
    }
    return out;
  }

  int number() const { return number_; }

 private:
  const std::string& file_;
  int number_;
  std::string text_;
};

std::string join(const std::vector<Node>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

ParseError::ParseError(std::string file, int line, int column, const std::string& message)
    : Error(ErrorCode::ParseError, located(file, line, column, message)),
      file_(std::move(file)),
      line_(line),
      column_(column),
      reason_(message) {}

ValidationError::ValidationError(std::string file, int line, const std::string& message,
                                 std::vector<Violation> violations)
    : Error(ErrorCode::ValidationError, located(file, line, 1, message)),
      file_(std::move(file)),
      line_(line),
      reason_(message),
      violations_(std::move(violations)) {}

const CoxeterDiagram& SpecDocument::diagram() const {
  if (const auto* t = std::get_if<TitsDiagram>(&payload)) return t->diagram;
  return std::get<CoxeterDiagram>(payload);
}

TitsDiagram SpecDocument::as_tits() const {
  if (const auto* t = std::get_if<TitsDiagram>(&payload)) return *t;
  return quasi_split(std::get<CoxeterDiagram>(payload));
}

SpecDocument parse_spec(const std::string& text, const std::string& file) {
  std::optional<std::string> builtin_name;
  std::vector<Clause> clauses;
  std::optional<CoxeterDiagram> diagram;
  bool custom = false;
  std::optional<std::vector<Node>> nodes;
  std::vector<Edge> edges;
  std::vector<Permutation> gamma;
  std::optional<NodeSet> anisotropic;
  int diagram_line = 0, nodes_line = 0, gamma_line = 0, anisotropic_line = 0;

  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const Line line(file, number, raw);
    const std::vector<Token> ts = line.words();
    if (ts.empty()) continue;
    const Token& key = ts.front();
    clauses.push_back({key.text, number});

    if (key.text == "diagram") {
      if (diagram_line) line.fail(key.column, "duplicate diagram clause (first on line " + std::to_string(diagram_line) + ")");
      if (ts.size() != 2) line.fail(key.column, "diagram takes exactly one name");
      diagram_line = number;
      if (ts[1].text == "custom") {
        custom = true;
        continue;
      }
      try {
        diagram = builtin(ts[1].text);
      } catch (const Error& e) {
        line.fail(ts[1].column, e.what());
      }
      builtin_name = ts[1].text;
      continue;
    }
    if (!diagram_line) line.fail(key.column, "the first clause must be 'diagram'");

    if (key.text == "nodes") {
      if (!custom) line.fail(key.column, "nodes is only allowed for custom diagrams");
      if (nodes) line.fail(key.column, "duplicate nodes clause");
      if (ts.size() < 2) line.fail(key.column, "nodes needs at least one label");
      nodes = line.integers(ts, 1);
      nodes_line = number;
    } else if (key.text == "edge") {
      if (!custom) line.fail(key.column, "edge is only allowed for custom diagrams");
      if (!nodes) line.fail(key.column, "edge before nodes");
      if (ts.size() != 4) line.fail(key.column, "edge takes three integers: i j m");
      const std::vector<Node> v = line.integers(ts, 1);
      edges.push_back({v[0], v[1], v[2]});
    } else if (key.text == "gamma") {
      const auto cycles = line.cycles(static_cast<std::size_t>(key.column - 1) + key.text.size());
      try {
        gamma.push_back(Permutation::from_cycles(cycles));
      } catch (const Error& e) {
        line.fail(ts[1].column, e.what());
      }
      if (!gamma_line) gamma_line = number;
    } else if (key.text == "anisotropic") {
      if (anisotropic) line.fail(key.column, "duplicate anisotropic clause");
      NodeSet a = line.integers(ts, 1);
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) line.fail(ts[1].column, "repeated node in anisotropic");
      anisotropic = std::move(a);
      anisotropic_line = number;
    } else {
      line.fail(key.column, "unknown key '" + key.text + "'");
    }
  }
  if (!diagram_line) throw ParseError(file, std::max(number, 1), 1, "missing diagram clause");
  if (custom && !nodes) throw ParseError(file, diagram_line, 1, "custom diagram without a nodes clause");

  if (custom) {
    try {
      diagram = CoxeterDiagram::create(*nodes, edges);
    } catch (const Error& e) {
      throw ValidationError(file, nodes_line, std::string(code_name(e.code())) + ": " + e.what());
    }
  }

  if (gamma.empty() && !anisotropic) return SpecDocument{text, file, builtin_name, *diagram, std::move(clauses)};
  TitsDiagram t{*diagram, AutGroup{gamma}, anisotropic.value_or(NodeSet{})};
  const ValidationReport report = validate(t);
  if (!report.ok()) {
    const bool gamma_fault = report.violations.front().kind == Violation::Kind::GammaNotAutomorphism;
    const int at = gamma_fault ? gamma_line : (anisotropic_line ? anisotropic_line : gamma_line);
    throw ValidationError(file, at, report.summary(), report.violations);
  }
  return SpecDocument{text, file, builtin_name, std::move(t), std::move(clauses)};
}

std::string render_spec(const std::variant<CoxeterDiagram, TitsDiagram>& payload,
                        const std::optional<std::string>& builtin_name) {
  const CoxeterDiagram& d =
      std::holds_alternative<TitsDiagram>(payload) ? std::get<TitsDiagram>(payload).diagram : std::get<CoxeterDiagram>(payload);
  std::string out;
  if (builtin_name) {
    out += "diagram " + *builtin_name + "\n";
  } else {
    out += "diagram custom\nnodes " + join(d.nodes()) + "\n";
    for (const Edge& e : d.edges()) out += "edge " + std::to_string(e.i) + " " + std::to_string(e.j) + " " + std::to_string(e.m) + "\n";
  }
  if (const auto* t = std::get_if<TitsDiagram>(&payload)) {
    for (const Permutation& p : t->gamma.generators) out += "gamma " + p.to_string() + "\n";
    if (!t->anisotropic.empty()) out += "anisotropic " + join(t->anisotropic) + "\n";
    // A Tits diagram with trivial Gamma and empty kernel needs some clause
    // to stay a Tits diagram on reparse.
    if (t->gamma.generators.empty() && t->anisotropic.empty()) out += "gamma ()\n";
  }
  return out;
}

std::string render_spec(const SpecDocument& doc) { return render_spec(doc.payload, doc.builtin_name); }

}  // namespace coxangle
