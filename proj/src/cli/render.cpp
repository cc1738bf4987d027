#include "coxangle/cli/render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace coxangle::cli {

namespace {

std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

void Table::print(std::ostream& out) const {
  std::vector<std::size_t> w(headers_.size());
  for (std::size_t c = 0; c < headers_.size(); ++c) w[c] = width(headers_[c]);
  for (const auto& row : rows_)
    for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], width(row[c]));

  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < w.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      s += cell;
      if (c + 1 < w.size()) s += std::string(w[c] - width(cell) + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line(headers_);
  std::vector<std::string> rule;
  for (std::size_t c = 0; c < w.size(); ++c) rule.push_back(std::string(w[c], '-'));
  line(rule);
  for (const auto& row : rows_) line(row);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void Table::print_csv(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c]);
    out << "\n";
  };
  line(headers_);
  for (const auto& row : rows_) line(row);
}

double approx12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

std::string cos_text(const Angle& a) {
  const auto c = a.rational_cos();
  return c ? c->get_str() : "";
}

std::string pi_text(const Angle& a) {
  const auto f = a.pi_fraction();
  return f ? f->get_str() : "";
}

nlohmann::json angle_json(const Angle& a) {
  nlohmann::json j;
  j["kind"] = a.kind() == Angle::Kind::ExactCos ? "exact_cos" : "rational_pi";
  if (const auto c = a.rational_cos()) j["cos"] = c->get_str();
  if (const auto f = a.pi_fraction()) {
    // Keep "p/q" even for integers so the field has one shape.
    j["pi_fraction"] = f->get_num().get_str() + "/" + f->get_den().get_str();
  }
  j["radians_approx"] = approx12(a.radians_approx());
  return j;
}

nlohmann::json nodes_json(const NodeSet& s) { return nlohmann::json(s); }

nlohmann::json diagram_json(const CoxeterDiagram& d) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : d.edges()) edges.push_back({e.i, e.j, e.m});
  return {{"type", d.type_name()}, {"nodes", d.nodes()}, {"edges", edges}};
}

nlohmann::json tits_json(const TitsDiagram& t) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Permutation& p : t.gamma.generators)
    if (!p.is_identity()) gens.push_back(p.to_string());
  return {{"diagram", diagram_json(t.diagram)}, {"gamma", gens}, {"anisotropic", t.anisotropic}};
}

std::string set_text(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

std::string sets_text(const std::vector<NodeSet>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + set_text(v[k]);
  return out;
}

std::string gamma_text(const AutGroup& g) {
  std::string out;
  for (const Permutation& p : g.generators)
    if (!p.is_identity()) out += (out.empty() ? "" : ", ") + p.to_string();
  return out.empty() ? "1" : "<" + out + ">";
}

std::string sketch(const CoxeterDiagram& d) {
  std::string out;
  for (const Edge& e : d.edges()) {
    std::string bond = e.m == 3 ? "-" : e.m == 4 ? "=" : e.m == 6 ? "≡" : "-" + std::to_string(e.m) + "-";
    out += "  " + std::to_string(e.i) + " " + bond + " " + std::to_string(e.j) + "\n";
  }
  if (out.empty()) out = "  (no edges)\n";
  return out;
}

}  // namespace coxangle::cli
