#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxangle::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kCatalogMismatch = 3;

/// Runs one command. `args` excludes the program name, e.g.
/// {"angle", "--diagram", "B3", "--node", "3", "--format", "json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxangle::cli
