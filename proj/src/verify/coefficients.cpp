#include "minhyp/verify/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace minhyp::verify {

namespace fs = std::filesystem;
using algebra::MultiPoly;
using algebra::RationalExpr;

std::string_view to_string(FixtureState s) {
  switch (s) {
    case FixtureState::ok: return "ok";
    case FixtureState::missing: return "missing";
    case FixtureState::checksum_mismatch: return "checksum-mismatch";
    case FixtureState::parse_error: return "parse-error";
    case FixtureState::spot_check_failed: return "spot-check-failed";
  }
  return "?";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string canonical_fixture_text(std::string_view raw) {
  std::string s;
  s.reserve(raw.size());
  for (char c : raw)
    if (c != '\r') s.push_back(c);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_spot_check(const SpotCheck& sc, const RationalExpr& value, const algebra::VarRegistry& reg,
                           const algebra::MacroTable& macros) {
  if (!value.is_polynomial()) return "spot check expects a polynomial";
  MultiPoly p = value.numerator();
  if (!sc.divisor.empty()) {
    auto q = algebra::exact_quotient(p, algebra::parse_poly(sc.divisor, reg, macros));
    if (!q) return "not divisible by " + sc.divisor;
    p = std::move(*q);
  }
  MultiPoly m = algebra::parse_poly(sc.monomial, reg, macros);
  if (m.size() != 1) return "spot-check monomial is not a monomial: " + sc.monomial;
  algebra::ExactScalar got = p.coefficient(m.leading().mono);
  if (got != sc.coefficient)
    return "coefficient of " + sc.monomial + " is " + got.get_str() + ", expected " + std::to_string(sc.coefficient);
  return {};
}

}  // namespace

FixtureBank FixtureBank::load(const fs::path& dir, const algebra::VarRegistry& reg, const algebra::MacroTable& macros,
                              const std::vector<SpotCheck>& spot_checks) {
  FixtureBank bank;
  bank.dir_ = dir;
  auto manifest = read_file(dir / "MANIFEST");
  if (!manifest) throw FixtureError("cannot read " + (dir / "MANIFEST").string());
  std::istringstream lines(*manifest);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name, sum;
    if (!(ls >> name)) continue;
    if (!(ls >> sum) || sum.size() != 16) throw FixtureError("malformed MANIFEST line: " + line);
    FixtureRecord rec;
    rec.name = name;
    rec.expected_checksum = std::stoull(sum, nullptr, 16);
    bank.records_[name] = std::move(rec);
  }

  for (auto& [name, rec] : bank.records_) {
    auto raw = read_file(dir / (name + ".expr"));
    if (!raw) {
      rec.state = FixtureState::missing;
      rec.detail = "file " + name + ".expr not found";
      continue;
    }
    std::string text = canonical_fixture_text(*raw);
    rec.actual_checksum = fnv1a64(text);
    if (rec.actual_checksum != rec.expected_checksum) {
      rec.state = FixtureState::checksum_mismatch;
      rec.detail = "checksum " + hex64(rec.actual_checksum) + " != manifest " + hex64(rec.expected_checksum);
      continue;
    }
    try {
      rec.value = algebra::parse_expr(text, reg, macros);
    } catch (const std::exception& e) {
      rec.state = FixtureState::parse_error;
      rec.detail = e.what();
      continue;
    }
    rec.state = FixtureState::ok;
  }

  for (const auto& sc : spot_checks) {
    auto it = bank.records_.find(sc.fixture);
    if (it == bank.records_.end() || it->second.state != FixtureState::ok) continue;
    std::string why;
    try {
      why = run_spot_check(sc, *it->second.value, reg, macros);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!why.empty()) {
      it->second.state = FixtureState::spot_check_failed;
      it->second.detail = why;
      it->second.value.reset();
    }
  }
  return bank;
}

bool FixtureBank::healthy(std::string_view name) const {
  auto it = records_.find(name);
  return it != records_.end() && it->second.state == FixtureState::ok;
}

const RationalExpr& FixtureBank::get(std::string_view name) const {
  auto it = records_.find(name);
  if (it == records_.end()) throw FixtureError("fixture " + std::string(name) + " is not in the MANIFEST");
  if (it->second.state != FixtureState::ok)
    throw FixtureError("fixture " + std::string(name) + ": " + it->second.detail);
  return *it->second.value;
}

const std::vector<SpotCheck>& coefficient_spot_checks() {
  static const std::vector<SpotCheck> checks{
      {"F11", "-3*v1^2*phi2*phi3*(v2^2 + v3^2)^2", "v1^2", 2},
      {"F11", "-3*v1^2*phi2*phi3*(v2^2 + v3^2)^2", "v1^4", -7},
      {"F12", "-3*v1^2*phi1^2*phi3*(v2^2 + v3^2)", "v1^2", 2},
      {"F12", "-3*v1^2*phi1^2*phi3*(v2^2 + v3^2)", "v1^4", -8},
      {"F13", "3*v1^2*phi1^2*phi2*(v2^2 + v3^2)", "v1^2", -1},
      {"F13", "3*v1^2*phi1^2*phi2*(v2^2 + v3^2)", "v1^4", 2},
      {"R1", "v1^2*(-1 + 3*v1^2)*(1 + 3*v2^2)*(1 - 3*v3^2)", "v1^6", 57},
      {"R1", "v1^2*(-1 + 3*v1^2)*(1 + 3*v2^2)*(1 - 3*v3^2)", "v1^8", -474},
      {"R2", "", "v1^8", 106},
      {"R2", "", "v1^10", -1127},
      {"P", "", "1", 4},
      {"P", "", "v1^2", -15},
      {"P1", "", "v2^2", -1},
      {"P1", "", "v3^8", -27},
      {"P2", "", "v2^2", 1},
      {"P2", "", "v3^6", 18},
      {"P3", "", "v2^2", -8},
      {"P3", "", "v2^2*v3^12", -810},
      {"P4", "", "v2^2", 16},
      {"P4", "", "v2^2*v3^8", 162},
      {"Q", "", "v2^2", -1},
      {"Q", "", "v2^4", -16},
      {"Q", "", "v2^6", -30},
      {"Q", "", "v3^12", -324},
  };
  return checks;
}

void write_manifest(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".expr") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  std::ofstream out(dir / "MANIFEST", std::ios::binary);
  if (!out) throw FixtureError("cannot write " + (dir / "MANIFEST").string());
  out << "# name fnv1a64(canonical text)\n";
  for (const auto& n : names) {
    auto raw = read_file(dir / (n + ".expr"));
    out << n << ' ' << hex64(fnv1a64(canonical_fixture_text(*raw))) << '\n';
  }
}

}  // namespace minhyp::verify
