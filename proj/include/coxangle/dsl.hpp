#pragma once

// Line-oriented diagram files:
//
//   # comment
//   diagram E6            (or: diagram custom)
//   nodes 1 2 3           (custom only)
//   edge 1 2 5            (custom only, repeatable)
//   gamma (1 6)(3 5)      (optional, repeatable: one generator per line)
//   anisotropic 3 4 5     (optional)
//
// Without gamma and anisotropic clauses the payload is a plain diagram.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coxangle/diagram.hpp"
#include "coxangle/errors.hpp"
#include "coxangle/tits.hpp"
#include "coxangle/tits_diagram.hpp"

namespace coxangle {

struct Clause {
  std::string key;
  int line;  // 1-based
};

struct SpecDocument {
  std::string source;
  std::string file;
  /// Set for `diagram <builtin>`; custom diagrams leave it empty.
  std::optional<std::string> builtin_name;
  std::variant<CoxeterDiagram, TitsDiagram> payload;
  std::vector<Clause> clauses;

  bool is_tits() const { return std::holds_alternative<TitsDiagram>(payload); }
  const CoxeterDiagram& diagram() const;
  /// The payload as a Tits diagram; a plain diagram becomes quasi-split.
  TitsDiagram as_tits() const;
};

class ParseError : public Error {
 public:
  ParseError(std::string file, int line, int column, const std::string& message);

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string file_;
  int line_;
  int column_;
  std::string reason_;
};

/// A syntactically fine document whose diagram cannot be built or whose
/// Tits data fails validation.
class ValidationError : public Error {
 public:
  ValidationError(std::string file, int line, const std::string& message, std::vector<Violation> violations = {});

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return 1; }
  const std::string& reason() const { return reason_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::string file_;
  int line_;
  std::string reason_;
  std::vector<Violation> violations_;
};

SpecDocument parse_spec(const std::string& text, const std::string& file = "<input>");

/// Renders a payload back to the file format. Builtin names are kept when
/// given; otherwise the diagram is written out as custom.
std::string render_spec(const std::variant<CoxeterDiagram, TitsDiagram>& payload,
                        const std::optional<std::string>& builtin_name = std::nullopt);
std::string render_spec(const SpecDocument& doc);

}  // namespace coxangle
