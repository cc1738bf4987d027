#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "coxangle/cli/cli.hpp"

using nlohmann::json;
namespace cli = coxangle::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COXANGLE_TEST_DATA) + "/" + name; }

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);  // throws unless exactly one document
}

}  // namespace

TEST_CASE("angle for B3 node 3 in JSON") {
  const json j = run_json({"angle", "--diagram", "B3", "--node", "3"});
  CHECK(j["kind"] == "exact_cos");
  CHECK(j["cos"] == "1/3");
  CHECK(!j.contains("pi_fraction"));
  CHECK(j["radians_approx"].get<double>() == doctest::Approx(1.230959417).epsilon(1e-9));
  CHECK(j["radians_approx"].dump() == "1.23095941734");
}

TEST_CASE("min-angle of the A7 file as a table") {
  const Result r = run({"min-angle", data("a7-alternating.spec")});
  CHECK(r.code == 0);
  CHECK(r.out.find("π/2") != std::string::npos);
  CHECK(r.out.find("GT_PI_3") != std::string::npos);
  std::istringstream lines(r.out);
  std::string header, rule, row;
  std::getline(lines, header);
  std::getline(lines, rule);
  std::getline(lines, row);
  CHECK(header.rfind("type", 0) == 0);
  CHECK(row.find(" 0 ") != std::string::npos);  // cos column
}

TEST_CASE("min-angle JSON carries both exact fields at the threshold") {
  const json j = run_json({"min-angle", data("e7-quadrangle.spec")});
  CHECK(j["angle"]["cos"] == "1/2");
  CHECK(j["angle"]["pi_fraction"] == "1/3");
  CHECK(j["verdict"] == "EQ_PI_3");
}

TEST_CASE("catalog passes") {
  const Result r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const json j = run_json({"catalog"});
  CHECK(j["failed"] == 0);
  CHECK(j["passed"] == j["entries"].size());
}

TEST_CASE("fold, opposition, orbit, validate") {
  json j = run_json({"fold", data("a5-folded.spec")});
  CHECK(j["folded"]["type"] == "B3");
  CHECK(j["anisotropic"] == json::array({1, 2}));
  j = run_json({"fold", "--diagram", "E6", "--gamma", "(1 6)(3 5)"});
  CHECK(j["folded"]["type"] == "F4");
  j = run_json({"opposition", "--diagram", "E6"});
  CHECK(j["involution"] == "(1 6)(3 5)");
  j = run_json({"orbit", "--diagram", "E8", "--node", "4"});
  CHECK(j["size"] == 483840);
  j = run_json({"orbit", "--diagram", "B3", "--node", "3", "--list"});
  CHECK(j["vectors"].size() == 8);
  j = run_json({"validate", data("e6-outer-quadrangle.spec")});
  CHECK(j["valid"] == true);
  CHECK(j["relative_rank"] == 2);
}

TEST_CASE("enumerate in CSV") {
  const Result r = run({"enumerate", "--diagram", "E7", "--rel-rank", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("anisotropic,isotropic_orbits,relative_rank,angle,cos,pi_fraction,radians_approx,verdict\n", 0) == 0);
  CHECK(r.out.find("EQ_PI_3") != std::string::npos);
}

TEST_CASE("exit codes and error documents") {
  json j = run_json({"validate", data("broken-syntax.spec")}, cli::kParseError);
  CHECK(j["error"]["code"] == "ParseError");
  CHECK(j["error"]["line"] == 2);

  j = run_json({"validate", data("broken-opposition.spec")}, cli::kDomainError);
  CHECK(j["valid"] == false);
  CHECK(j["violations"][0]["code"] == "opposition-violated");

  j = run_json({"min-angle", data("broken-opposition.spec")}, cli::kDomainError);
  CHECK(j["error"]["code"] == "ValidationError");

  j = run_json({"angle", "--diagram", "H3", "--node", "1"}, cli::kDomainError);
  CHECK(j["error"]["code"] == "NonCrystallographic");

  j = run_json({"min-angle", "--diagram", "A3", "--gamma", "(1 2)"}, cli::kDomainError);
  CHECK(j["error"]["code"] == "ValidationError");

  j = run_json({"nonsense"}, cli::kParseError);
  CHECK(j["error"]["code"] == "UsageError");

  j = run_json({"angle", "--diagram", "B3"}, cli::kParseError);
  j = run_json({"orbit", "--diagram", "E8", "--node", "4", "--orbit-budget", "100"}, cli::kDomainError);
  CHECK(j["error"]["code"] == "OrbitBudgetExceeded");

  j = run_json({"validate", data("no-such-file.spec")}, cli::kDomainError);
  CHECK(j["error"]["code"] == "IoError");

  const Result r = run({"validate", data("broken-syntax.spec")});
  CHECK(r.code == cli::kParseError);
  CHECK(r.err.find("broken-syntax.spec:2:") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("orbit budget falls back to the environment") {
  setenv("COXANGLE_ORBIT_BUDGET", "100", 1);
  json j = run_json({"orbit", "--diagram", "E8", "--node", "4"}, cli::kDomainError);
  CHECK(j["error"]["code"] == "OrbitBudgetExceeded");
  j = run_json({"orbit", "--diagram", "E8", "--node", "4", "--orbit-budget", "1000000"});
  CHECK(j["size"] == 483840);
  unsetenv("COXANGLE_ORBIT_BUDGET");
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("min-angle") != std::string::npos);
}
