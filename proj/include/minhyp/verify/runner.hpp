#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "minhyp/verify/certificate.hpp"

namespace minhyp::verify {

struct RunOptions {
  std::filesystem::path fixture_dir = MINHYP_FIXTURE_DIR;
  std::filesystem::path golden_dir = MINHYP_GOLDEN_DIR;
  /// fnmatch-style glob over certificate names.
  std::string filter = "*";
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  EvalOptions eval;
};

struct VerificationReport {
  std::vector<CertificateResult> results;  ///< sorted by name
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;
  double seconds = 0;

  /// True for an empty selection.
  bool all_passed() const;
  std::size_t count(Status s) const;

  /// Structured report. Timings are left out unless requested so that the
  /// document is reproducible byte for byte.
  std::string to_json(bool include_timings = false) const;
  std::string summary_table() const;
  /// name,status,seconds,eval_points,lhs_terms,rhs_terms
  std::string timings_csv() const;
};

/// Names of every certificate a run over `opts` could select, sorted.
std::vector<std::string> certificate_names(const RunOptions& opts = {});

/// Throws FixtureError if a MANIFEST cannot be read.
VerificationReport run_all(const RunOptions& opts = {});

}  // namespace minhyp::verify
