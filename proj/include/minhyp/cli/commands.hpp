#pragma once

#include <iosfwd>
#include <string>

#include "minhyp/cli/config.hpp"

namespace minhyp::cli {

/// Exit-status contract of the harness.
enum Exit : int {
  ok = 0,
  failure = 1,      ///< a certificate or validation check failed
  config = 2,       ///< configuration error
  obstruction = 3,  ///< the requested construction is not admitted
};

struct CommandIo {
  std::ostream& out;
  std::ostream& err;
};

/// Compiler and active SIMD instruction set; no timestamp, so reports stay
/// reproducible.
std::string environment_stamp();

int cmd_verify(const RunConfig& cfg, CommandIo io);
int cmd_build_catenary(const RunConfig& cfg, CommandIo io);
int cmd_build_pair(const RunConfig& cfg, CommandIo io);
int cmd_check_pair(const RunConfig& cfg, CommandIo io);
/// Converts the artifacts of an earlier run directory into CSV files.
int cmd_export(const std::filesystem::path& run_dir, CommandIo io);

/// Dispatches by name; catches configuration errors and obstructions and
/// maps them to exit statuses.
int run_command(const std::string& name, const RunConfig& cfg, CommandIo io);

}  // namespace minhyp::cli
