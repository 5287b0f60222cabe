#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minhyp::cli {

/// Bad configuration: unknown key, malformed value, degenerate grid. Exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeySpec {
  std::string_view key;
  std::string_view fallback;  ///< empty: derived from other keys or the case
  std::string_view help;
  bool affects_results = true;  ///< false keys are left out of the run hash
};

/// Every accepted key, in canonical order.
const std::vector<KeySpec>& schema();

/// Flat key=value configuration. Values stay strings until a command reads
/// them, so the echo in reports is exactly what was given.
class RunConfig {
 public:
  /// Parses `key = value` lines; '#' starts a comment. Throws ConfigError.
  static RunConfig parse(std::string_view text, std::string_view origin = "config");
  static RunConfig load(const std::filesystem::path& path);

  /// Throws ConfigError for keys outside the schema.
  void set(std::string_view key, std::string value);
  void merge(const RunConfig& overrides);
  bool has(std::string_view key) const;
  /// Given value or the schema fallback.
  std::string get(std::string_view key) const;

  double number(std::string_view key) const;
  std::int64_t integer(std::string_view key) const;
  std::uint64_t unsigned_integer(std::string_view key) const;
  /// Grid "AxBxC"; every size must be at least `min`.
  std::array<int, 3> grid(std::string_view key, int min = 2) const;

  /// Effective key=value lines (schema order, fallbacks filled in, empty
  /// values kept empty), preceded by the subcommand.
  std::string canonical(std::string_view subcommand) const;
  /// 16 hex digits of the FNV-1a hash of the result-affecting canonical lines.
  std::string hash(std::string_view subcommand) const;
  /// out/run-<hash>
  std::filesystem::path run_dir(std::string_view subcommand) const;

  const std::map<std::string, std::string, std::less<>>& given() const { return values_; }

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

std::uint64_t fnv1a64(std::string_view text);

}  // namespace minhyp::cli
