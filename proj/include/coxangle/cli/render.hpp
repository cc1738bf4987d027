#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxangle/angle.hpp"
#include "coxangle/diagram.hpp"
#include "coxangle/tits_diagram.hpp"

namespace coxangle::cli {

enum class Format { Table, Json, Csv };

/// Column-aligned text table; widths count code points, so "π" is one.
class Table {
 public:
  explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const;
  void print_csv(std::ostream& out) const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s);

/// 12 significant digits, for display.
double approx12(double x);

/// {"kind", "cos"?, "pi_fraction"?, "radians_approx"}; at least one of the
/// exact fields is always present.
nlohmann::json angle_json(const Angle& a);
std::string cos_text(const Angle& a);   // "1/3", or "" when irrational
std::string pi_text(const Angle& a);    // "1/2", or ""

nlohmann::json nodes_json(const NodeSet& s);
nlohmann::json diagram_json(const CoxeterDiagram& d);
nlohmann::json tits_json(const TitsDiagram& t);

std::string set_text(const NodeSet& s);  // "{1,3,5}"
std::string sets_text(const std::vector<NodeSet>& v);
std::string gamma_text(const AutGroup& g);  // "<(1 5)(2 4)>" or "1"

/// ASCII sketch: one line per edge label, e.g. "1 - 2 = 3".
std::string sketch(const CoxeterDiagram& d);

}  // namespace coxangle::cli
