#include "minhyp/verify/runner.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "minhyp/verify/catalog.hpp"

namespace minhyp::verify {

namespace {

bool matches(const std::string& pattern, const std::string& name) {
  return fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

FixtureBank load_coefficients(const RunOptions& opts) {
  const auto& ctx = symbols();
  return FixtureBank::load(opts.fixture_dir, ctx.registry(), ctx.macros(), coefficient_spot_checks());
}

FixtureBank load_goldens(const RunOptions& opts) {
  const auto& ctx = symbols();
  return FixtureBank::load(opts.golden_dir, ctx.registry(), ctx.macros());
}

CertificateResult fixture_result(const std::string& prefix, const FixtureRecord& rec) {
  CertificateResult r;
  r.name = prefix + rec.name;
  if (rec.state == FixtureState::ok) {
    r.status = Status::proved;
    r.detail = "checksum and spot checks ok";
    r.lhs_terms = rec.value->term_count();
  } else {
    r.status = Status::failed;
    r.detail = std::string(to_string(rec.state)) + ": " + rec.detail;
  }
  return r;
}

std::string unhealthy_input(const CertificateSpec& spec, const FixtureBank& coefficients, const FixtureBank& goldens) {
  for (const auto& f : spec.fixtures)
    if (!coefficients.healthy(f)) return "fixture " + f + " is unusable";
  for (const auto& f : spec.goldens)
    if (!goldens.healthy(f)) return "golden " + f + " is unusable";
  return {};
}

}  // namespace

const std::vector<CertificateSpec>& certificate_catalog() {
  static const std::vector<CertificateSpec> all = [] {
    std::vector<CertificateSpec> v;
    add_structure_checks(v);
    add_case_checks(v);
    add_curvature_checks(v);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return v;
  }();
  return all;
}

std::vector<std::string> certificate_names(const RunOptions& opts) {
  std::vector<std::string> names;
  for (const auto& s : certificate_catalog()) names.push_back(s.name);
  const FixtureBank coefficients = load_coefficients(opts);
  const FixtureBank goldens = load_goldens(opts);
  for (const auto& [n, _] : coefficients.records()) names.push_back("fixture." + n);
  for (const auto& [n, _] : goldens.records()) names.push_back("golden." + n);
  std::sort(names.begin(), names.end());
  return names;
}

VerificationReport run_all(const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.assumptions = {
      "Gauss equations of the two immersions are taken with both signs equal to +1",
      "evaluation points: numerators and denominators uniform in [1, 97], seed " + std::to_string(opts.eval.seed) +
          ", " + std::to_string(opts.eval.points) + " points per certificate",
      "unit relation v1^2 - v2^2 + v3^2 = 1 applied as v3^2 -> 1 - v1^2 + v2^2 where a certificate says so",
  };

  const FixtureBank coefficients = load_coefficients(opts);
  const FixtureBank goldens = load_goldens(opts);
  for (const auto& [n, rec] : coefficients.records())
    if (matches(opts.filter, "fixture." + n)) report.results.push_back(fixture_result("fixture.", rec));
  for (const auto& [n, rec] : goldens.records())
    if (matches(opts.filter, "golden." + n)) report.results.push_back(fixture_result("golden.", rec));

  std::vector<const CertificateSpec*> selected;
  for (const auto& s : certificate_catalog())
    if (matches(opts.filter, s.name)) selected.push_back(&s);

  const auto& ctx = symbols();
  const DerivationSystem closed(ctx, VMode::eliminated);
  const DerivationSystem open(ctx, VMode::free);
  const Inputs inputs{ctx, closed, open, coefficients, goldens};

  std::vector<CertificateResult> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) {
      const auto& spec = *selected[i];
      if (auto why = unhealthy_input(spec, coefficients, goldens); !why.empty()) {
        out[i].name = spec.name;
        out[i].status = Status::skipped;
        out[i].detail = why;
        continue;
      }
      Claim claim;
      auto tb = std::chrono::steady_clock::now();
      try {
        claim = spec.build(inputs);
      } catch (const std::exception& e) {
        out[i].name = spec.name;
        out[i].status = Status::failed;
        out[i].detail = std::string("could not build the claim: ") + e.what();
        continue;
      }
      double build_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - tb).count();
      out[i] = certify(spec.name, claim, opts.eval);
      out[i].seconds += build_s;
    }
  };
  unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, std::max<std::size_t>(selected.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : out) report.results.push_back(std::move(r));
  std::sort(report.results.begin(), report.results.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  if (report.results.empty()) report.warnings.push_back("filter '" + opts.filter + "' selects no certificate");
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

bool VerificationReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

std::size_t VerificationReport::count(Status s) const {
  return std::count_if(results.begin(), results.end(), [s](const auto& r) { return r.status == s; });
}

std::string VerificationReport::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["passed"] = all_passed();
  j["assumptions"] = assumptions;
  j["warnings"] = warnings;
  nlohmann::ordered_json counts;
  for (auto s : {Status::proved, Status::counterexample, Status::failed, Status::engine_fault, Status::skipped}) {
    CertificateResult probe;
    probe.status = s;
    counts[s == Status::proved ? "proved" : status_label(probe)] = count(s);
  }
  j["counts"] = counts;
  nlohmann::ordered_json certs = nlohmann::ordered_json::object();
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["status"] = status_label(r);
    if (!r.detail.empty()) c["detail"] = r.detail;
    if (!r.note.empty()) c["note"] = r.note;
    c["lhs_terms"] = r.lhs_terms;
    c["rhs_terms"] = r.rhs_terms;
    c["residual_terms"] = r.residual_terms;
    c["eval_points"] = r.eval_points;
    if (!r.point.empty()) {
      nlohmann::ordered_json p;
      for (const auto& [k, v] : r.point) p[k] = v;
      c["point"] = p;
    }
    if (include_timings) c["seconds"] = r.seconds;
    certs[r.name] = c;
  }
  j["certificates"] = certs;
  if (include_timings) j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

std::string VerificationReport::summary_table() const {
  std::size_t width = 11;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  os << std::left << std::setw(int(width)) << "certificate" << "  " << std::setw(15) << "status" << std::right
     << std::setw(10) << "seconds" << std::setw(10) << "terms" << "\n";
  os << std::string(width + 37, '-') << "\n";
  for (const auto& r : results) {
    os << std::left << std::setw(int(width)) << r.name << "  " << std::setw(15) << status_label(r) << std::right
       << std::setw(10) << std::fixed << std::setprecision(3) << r.seconds << std::setw(10)
       << (r.lhs_terms + r.rhs_terms) << "\n";
    if (!r.passed() && !r.detail.empty()) os << "    " << r.detail << "\n";
  }
  os << std::string(width + 37, '-') << "\n";
  os << results.size() << " certificates, " << count(Status::proved) << " proved, "
     << results.size() - count(Status::proved) << " not proved, " << std::fixed << std::setprecision(2) << seconds
     << " s\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string VerificationReport::timings_csv() const {
  std::ostringstream os;
  os << "name,status,seconds,eval_points,lhs_terms,rhs_terms\n";
  for (const auto& r : results)
    os << r.name << ',' << status_label(r) << ',' << r.seconds << ',' << r.eval_points << ',' << r.lhs_terms << ','
       << r.rhs_terms << '\n';
  return os.str();
}

}  // namespace minhyp::verify
