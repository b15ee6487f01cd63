#pragma once

// nlohmann/json single header, vendored on the include path
#include <json.hpp>

#include "ie/checks.hpp"

namespace ie {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> suites{"all"};
  std::vector<std::string> surfaces;
  long samples = 200000;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int degree = 24;
  double sigmas = 4.0;
  double det_tol = 1e-9;
  double eq_tol = 1e-8;
  int random_directions = 20;
  int sample_points = 100;
  std::string out_json;
  std::string out_csv;
  std::string plots_dir;

  CheckContext context() const;
};

/// Semantic validation shared by the CLI and tests: resolves "all", checks
/// the sample floor, requires a seed and at least one parseable surface.
/// Throws ConfigError (or SpecParseError for surface grammar offenses).
void validate_config(RunConfig& cfg);

struct SkippedCheck {
  std::string check_id;
  std::string surface;
  std::string reason;
};

struct RunOutcome {
  std::vector<CheckResult> results;
  std::vector<SkippedCheck> skipped;
  int exit_code = 0;  // 0 all pass, 1 unexpected verdicts
};

/// Runs every requested (suite, surface) combination that applies. A check
/// that throws is flushed as an inconclusive result rather than aborting the
/// run.
RunOutcome run_suites(const RunConfig& cfg);

nlohmann::ordered_json report_json(const RunConfig& cfg, const RunOutcome& out);
std::string report_csv(const RunOutcome& out);

/// Plot-ready sweeps: int phi^2 / Vol per direction, and the translation
/// density h with its sin^2-weighted integrand over the level angle.
std::string directions_csv(const RunOutcome& out);
std::string sweeps_csv(const RunConfig& cfg);

/// Executes the run and writes the configured artifacts. Returns the exit
/// code (0 pass, 1 unexpected verdict, 2 configuration error).
int run_and_emit(RunConfig cfg);

}  // namespace ie
