#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minhyp/algebra/rational_expr.hpp"
#include "minhyp/algebra/registry.hpp"
#include "minhyp/algebra/text.hpp"

namespace minhyp::verify {

struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FixtureState { ok, missing, checksum_mismatch, parse_error, spot_check_failed };

std::string_view to_string(FixtureState s);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes);

/// Text a checksum is taken over: CR dropped, trailing whitespace trimmed.
std::string canonical_fixture_text(std::string_view raw);

/// A leading-term golden: the coefficient of `monomial` in the fixture after
/// exact division by `divisor` (empty for none).
struct SpotCheck {
  std::string fixture;
  std::string divisor;
  std::string monomial;
  long coefficient;
};

struct FixtureRecord {
  std::string name;
  FixtureState state = FixtureState::missing;
  std::uint64_t expected_checksum = 0;
  std::uint64_t actual_checksum = 0;
  std::string detail;
  std::optional<algebra::RationalExpr> value;
};

/// Named expressions loaded from a directory of `<name>.expr` files listed in
/// a MANIFEST (`<name> <16 hex digits>` per line, `#` comments).
class FixtureBank {
 public:
  /// Never throws on bad fixtures; each problem is recorded on its entry. A
  /// missing or unreadable MANIFEST throws FixtureError.
  static FixtureBank load(const std::filesystem::path& dir, const algebra::VarRegistry& reg,
                          const algebra::MacroTable& macros, const std::vector<SpotCheck>& spot_checks = {});

  bool has(std::string_view name) const { return records_.count(std::string(name)) > 0; }
  bool healthy(std::string_view name) const;
  /// Throws FixtureError unless the entry is healthy.
  const algebra::RationalExpr& get(std::string_view name) const;
  const std::map<std::string, FixtureRecord, std::less<>>& records() const { return records_; }
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::map<std::string, FixtureRecord, std::less<>> records_;
};

/// Goldens for the coefficient transcription.
const std::vector<SpotCheck>& coefficient_spot_checks();

/// Writes a MANIFEST covering every `*.expr` file in `dir`.
void write_manifest(const std::filesystem::path& dir);

}  // namespace minhyp::verify
