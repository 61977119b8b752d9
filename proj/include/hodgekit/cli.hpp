#pragma once

#include "hodgekit/cohomology.hpp"
#include "hodgekit/models.hpp"
#include "hodgekit/random_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hodgekit {

enum class OutputFormat { table, json, csv };

struct RunConfig {
  std::string command;  // compute | verify | list
  std::string model;    // catalog name or file path
  std::vector<std::string> flavors;
  std::vector<std::string> checks;
  OutputFormat output = OutputFormat::table;
  std::uint64_t seed = kDefaultSeed;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Flavor names accepted by --flavors, before expansion of "abc" and "all".
const std::vector<std::string>& flavor_names();
/// Check names accepted by --checks ("action:<name>" is also accepted).
const std::vector<std::string>& check_names();

/// Expands a --flavors list into flavors in a fixed order; throws Error on an unknown name.
std::vector<Flavor> expand_flavors(const std::vector<std::string>& names);

/// Resolves a catalog name or reads a model file.
ModelSpec resolve_model(const std::string& ref);

struct CheckResult {
  std::string name;
  std::string verdict;  // PASS, FAIL, WARN, TRIVIAL, NONTRIVIAL
  std::string detail;
};

/// Runs one named check; throws Error when the check does not apply to the model.
CheckResult run_check(const BuiltModel& model, const std::string& check, std::uint64_t seed);

/// Executes a parsed configuration. Exit codes: 0 success, 1 a check failed,
/// 2 usage, parse or validation error (diagnostics in `err`).
RunResult run(const RunConfig& cfg);

/// Parses command-line arguments (without the program name) and runs them.
RunResult run_cli(const std::vector<std::string>& args);

}  // namespace hodgekit
