#pragma once

// Subcommand driver shared by the psl2z executable, the Python module and
// the tests.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace psl2z::cli {

inline constexpr const char* kSchema = "psl2z.report/1";

struct RunConfig {
  std::string subcommand;
  int dim = 8;
  std::uint64_t seed = 7;
  std::optional<std::string> lambda;
  std::optional<std::string> lambda2;
  std::optional<std::string> angles;
  double tol = 1e-8;
  double solver_threshold = 1e-8;
  double margin = 1e-3;
  int count = 1;
  bool json = false;
  std::optional<std::string> out_path;
};

struct CheckRecord {
  std::string name;
  long long instances = 0;
  double max_defect = 0.0;
  bool pass = false;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  /// Command-specific fields, merged into the top level of the JSON output.
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Runs one subcommand. Returns 0 when every check passes, 1 on a failed
/// check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-parsed configuration.
Report execute(const RunConfig& config);

}  // namespace psl2z::cli
