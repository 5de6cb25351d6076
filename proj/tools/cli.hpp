#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gravotto/spacetime.hpp"

namespace gravotto::cli {

/// Invalid or incomplete command line; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Thrown when --help is requested; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kCycle, kBound, kSweepRn, kSweepDeSitter, kMc };
enum class OutputFormat { kJson, kCsv };

/// Fully validated invocation. Flags win over --config values; every
/// missing or contradictory flag is reported in one UsageError.
struct RunConfig {
  Command command = Command::kCycle;
  Metric metric = UniformField{0.0};
  Station alice;
  Station bob;
  double t_cold = 0.0;
  double t_hot = 0.0;
  double gap_a = 0.0;
  bool first_order = false;  ///< uniform field only: chi = 1 + g*(z_a - z_b)
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  // Sweep geometry in horizon units (r_s for rn, a for desitter).
  std::vector<double> anchors;
  double sep_min = 0.0;
  double sep_max = 0.0;
  std::size_t points = 200;
};

RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the command; results go to `out` (or the configured --out file),
/// warnings to `err`. Returns the process exit code.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + dispatch with the documented error-to-exit-code mapping:
/// 0 success, 1 domain/physics error, 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace gravotto::cli
