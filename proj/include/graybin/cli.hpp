#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "graybin/pgm_io.hpp"

namespace graybin::cli {

// Process exit codes. Distinct so scripts can tell failures apart.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kFormatError = 2,
  kArgumentError = 3,
};

enum class Mode { kMean, kIterative, kCompare };

struct CliConfig {
  std::filesystem::path input_path;
  std::filesystem::path output_path;
  Mode mode = Mode::kCompare;
  std::optional<std::filesystem::path> report_path;
  std::optional<std::filesystem::path> histogram_dir;
  PgmFlavor flavor = PgmFlavor::kRaw;
};

/// Parses argv. Returns the config, or the exit code to terminate with
/// (kOk after --help, kArgumentError on bad usage).
std::variant<CliConfig, int> parse_args(int argc, const char* const* argv,
                                        std::ostream& out, std::ostream& err);

/// Executes one run. Either every output file is written or none is.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Output image path for `method` ("mean" / "iterative") in compare mode:
/// "<stem>.mean.pgm" / "<stem>.iter.pgm", where a trailing ".pgm" on the
/// configured output is replaced.
std::filesystem::path compare_output_path(const std::filesystem::path& output,
                                          std::string_view method);

int main_entry(int argc, const char* const* argv);

}  // namespace graybin::cli
