#include "minhyp/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "minhyp/geometry/obj.hpp"
#include "minhyp/geometry/pair.hpp"
#include "minhyp/profile/profile.hpp"
#include "minhyp/simd/kernels.hpp"
#include "minhyp/verify/coefficients.hpp"
#include "minhyp/verify/runner.hpp"

namespace minhyp::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json config_echo(const RunConfig& cfg) {
  json j = json::object();
  for (const auto& k : schema()) j[std::string(k.key)] = cfg.get(k.key);
  return j;
}

json header(const RunConfig& cfg, std::string_view subcommand) {
  json j;
  j["subcommand"] = subcommand;
  j["config_hash"] = cfg.hash(subcommand);
  j["config"] = config_echo(cfg);
  j["environment"] = environment_stamp();
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

fs::path prepare_run_dir(const RunConfig& cfg, std::string_view subcommand) {
  fs::path dir = cfg.run_dir(subcommand);
  fs::create_directories(dir);
  write_text(dir / "config.txt", cfg.canonical(subcommand));
  return dir;
}

geometry::PairCase parse_case(const std::string& s) {
  if (s == "umbilic") return geometry::PairCase::umbilic;
  if (s == "catenary") return geometry::PairCase::catenary;
  if (s == "cone") return geometry::PairCase::cone;
  throw ConfigError("key 'mode' expects umbilic, catenary or cone, got '" + s + "'");
}

profile::CatenaryForm parse_form(const std::string& s) {
  if (s == "quadratic") return profile::CatenaryForm::quadratic;
  if (s == "printed") return profile::CatenaryForm::printed;
  throw ConfigError("key 'form' expects quadratic or printed, got '" + s + "'");
}

bool parse_switch(const RunConfig& cfg, std::string_view key) {
  std::string v = cfg.get(key);
  if (v == "on") return true;
  if (v == "off") return false;
  throw ConfigError("key '" + std::string(key) + "' expects on or off, got '" + v + "'");
}

std::optional<double> optional_number(const RunConfig& cfg, std::string_view key) {
  if (cfg.get(key).empty()) return std::nullopt;
  return cfg.number(key);
}

int parse_delta(const RunConfig& cfg) {
  auto d = cfg.integer("delta");
  if (d < -1 || d > 1) throw ConfigError("key 'delta' must be -1, 0 or 1");
  return int(d);
}

double positive(const RunConfig& cfg, std::string_view key) {
  double x = cfg.number(key);
  if (!(x > 0)) throw ConfigError("key '" + std::string(key) + "' must be positive");
  return x;
}

geometry::PairParams pair_params(const RunConfig& cfg) {
  geometry::PairParams p;
  p.kind = parse_case(cfg.get("mode"));
  p.c = cfg.number("c");
  p.ct = cfg.number("ctilde");
  p.step = positive(cfg, "step");
  p.s0 = optional_number(cfg, "s0");
  p.length = optional_number(cfg, "length");
  if (p.length && !(*p.length > 0)) throw ConfigError("key 'length' must be positive");
  p.r = optional_number(cfg, "r");
  p.delta = parse_delta(cfg);
  p.gamma0 = cfg.number("gamma0");
  p.dgamma0 = cfg.number("dgamma0");
  p.form = parse_form(cfg.get("form"));
  p.cbar = optional_number(cfg, "cbar");
  p.helix_a = cfg.number("helix_a");
  p.helix_b = cfg.number("helix_b");
  return p;
}

geometry::DualPairOptions pair_options(const RunConfig& cfg, const geometry::PairParams& p) {
  geometry::DualPairOptions o;
  o.kind = p.kind;
  o.c = p.c;
  o.ct = p.ct;
  o.grid = cfg.grid("grid");
  o.threads = unsigned(cfg.unsigned_integer("threads"));
  o.tol.minimal = positive(cfg, "tol_minimal");
  auto metric = optional_number(cfg, "tol_metric");
  o.tol.metric = metric ? *metric : (p.kind == geometry::PairCase::umbilic ? 1e-8 : 1e-6);
  o.tol.relation = positive(cfg, "tol_relation");
  o.tol.ruling = positive(cfg, "tol_ruling");
  o.tol.mu_squared = positive(cfg, "tol_mu");
  o.tol.model = positive(cfg, "tol_model");
  o.tol.gauss = positive(cfg, "tol_gauss");
  return o;
}

geometry::Derivatives parse_derivative(const RunConfig& cfg) {
  std::string v = cfg.get("derivative");
  if (v == "jet") return geometry::Derivatives::jet;
  if (v == "central") return geometry::Derivatives::central;
  throw ConfigError("key 'derivative' expects jet or central, got '" + v + "'");
}

json measure_json(const geometry::Measure& m) {
  json j;
  j["name"] = m.name;
  j["value"] = std::isnan(m.value) ? json(nullptr) : json(m.value);
  j["tol"] = m.tol;
  j["passed"] = m.passed();
  return j;
}

void print_measures(std::ostream& os, const std::vector<geometry::Measure>& ms) {
  for (const auto& m : ms) {
    os << "  " << std::left << std::setw(26) << m.name << std::right << std::setw(12) << std::scientific
       << std::setprecision(3) << m.value << "  tol " << std::setprecision(1) << m.tol << "  "
       << (m.passed() ? "ok" : "FAIL") << '\n';
  }
  os << std::defaultfloat << std::setprecision(6);
}

json samples_json(const geometry::DualPairReport& r) {
  json j;
  j["columns"] = {"u1", "u2", "u3", "ut1", "ut2", "ut3", "metric", "sum_lambda", "lambda_pattern", "relation",
                  "gauss_f", "gauss_ft"};
  json rows = json::array();
  auto num = [](double x) { return std::isnan(x) ? json(nullptr) : json(x); };
  for (const auto& s : r.rows)
    rows.push_back({s.u[0], s.u[1], s.u[2], s.ut[0], s.ut[1], s.ut[2], num(s.metric), num(s.sum_lambda),
                    num(s.lambda_pattern), num(s.relation), num(s.gauss_f), num(s.gauss_ft)});
  j["rows"] = std::move(rows);
  return j;
}

struct PairOutcome {
  json report;
  bool passed = false;
};

// Builds and checks one pair; with `dir` also writes meshes, profiles and samples.
PairOutcome run_pair(const RunConfig& cfg, std::string_view subcommand, const fs::path* dir, CommandIo io) {
  auto params = pair_params(cfg);
  auto opts = pair_options(cfg, params);
  auto mesh = cfg.grid("mesh");
  auto deriv = parse_derivative(cfg);
  double fd_step = positive(cfg, "fd_step");
  bool convergence = parse_switch(cfg, "convergence");
  double tol_order = positive(cfg, "tol_order");

  PairOutcome out;
  out.report = header(cfg, subcommand);
  out.report["case"] = geometry::to_string(params.kind);

  auto build = geometry::build_pair(params);
  for (auto* patch : {&build.f, &build.ft}) {
    patch->mode = deriv;
    patch->fd_step = fd_step;
  }
  auto rep = geometry::check_dual_pair(build.f, build.ft, opts);
  auto probe = geometry::interior_grid(build.f, opts.grid[0], std::min(opts.grid[1], 4), std::min(opts.grid[2], 4));
  if (build.profile_f)
    rep.measures.push_back({"f_warped_metric", geometry::rotation_metric_deviation(build.f, *build.profile_f, probe),
                            opts.tol.metric});
  auto probe_t = geometry::interior_grid(build.ft, opts.grid[0], std::min(opts.grid[1], 4), std::min(opts.grid[2], 4));
  rep.measures.push_back({"ft_warped_metric", geometry::rotation_metric_deviation(build.ft, build.profile_ft, probe_t),
                          opts.tol.metric});

  bool passed = rep.passed();
  json measures = json::array();
  for (const auto& m : rep.measures) measures.push_back(measure_json(m));
  out.report["measures"] = std::move(measures);
  out.report["notes"] = rep.notes;
  io.out << "pair " << geometry::to_string(params.kind) << " c=" << params.c << " ctilde=" << params.ct << '\n';
  print_measures(io.out, rep.measures);

  if (params.kind == geometry::PairCase::catenary && convergence) {
    auto table = geometry::catenary_convergence(params, geometry::kConvergenceSteps);
    json rows = json::array();
    for (const auto& r : table.rows)
      rows.push_back({{"step", r.step}, {"ode_residual", r.ode_residual}, {"sum_lambda", r.sum_lambda},
                      {"relation", r.relation}});
    bool ok = table.ode_order >= tol_order && table.lambda_order >= tol_order && table.relation_order >= tol_order;
    out.report["convergence"] = {{"rows", rows},
                                 {"ode_order", table.ode_order},
                                 {"sum_lambda_order", table.lambda_order},
                                 {"relation_order", table.relation_order},
                                 {"tol_order", tol_order},
                                 {"passed", ok}};
    io.out << "  convergence orders: ode " << table.ode_order << ", sum lambda " << table.lambda_order
           << ", relation " << table.relation_order << (ok ? "  ok" : "  FAIL") << '\n';
    passed = passed && ok;
  }

  if (dir) {
    json artifacts = json::array();
    geometry::write_obj(*dir / "f.obj", build.f, mesh[0], mesh[1], mesh[2]);
    geometry::write_obj(*dir / "f_dual.obj", build.ft, mesh[0], mesh[1], mesh[2]);
    artifacts.push_back("f.obj");
    artifacts.push_back("f_dual.obj");
    if (build.profile_f) {
      profile::write_profile_csv(*dir / "profile_f.csv", *build.profile_f, build.height);
      artifacts.push_back("profile_f.csv");
    }
    profile::write_profile_csv(*dir / "profile_dual.csv", build.profile_ft, build.height);
    artifacts.push_back("profile_dual.csv");
    write_json(*dir / "samples.json", samples_json(rep));
    artifacts.push_back("samples.json");
    out.report["artifacts"] = std::move(artifacts);
  }
  out.report["passed"] = passed;
  out.passed = passed;
  return out;
}

int pair_command(const RunConfig& cfg, CommandIo io, std::string_view subcommand, bool write_artifacts) {
  // Validate everything that does not need a computation first.
  auto params = pair_params(cfg);
  pair_options(cfg, params);
  cfg.grid("mesh");
  parse_derivative(cfg);
  fs::path dir = prepare_run_dir(cfg, subcommand);
  try {
    auto outcome = run_pair(cfg, subcommand, write_artifacts ? &dir : nullptr, io);
    write_json(dir / "report.json", outcome.report);
    io.out << "report: " << (dir / "report.json").string() << '\n';
    return outcome.passed ? Exit::ok : Exit::failure;
  } catch (const geometry::ObstructionError& e) {
    json j = header(cfg, subcommand);
    j["case"] = geometry::to_string(params.kind);
    j["obstruction"] = e.what();
    j["passed"] = false;
    write_json(dir / "report.json", j);
    io.err << "obstruction: " << e.what() << '\n';
    return Exit::obstruction;
  }
}

void csv_cell(std::ostream& os, const json& v) {
  if (v.is_null())
    os << "nan";
  else if (v.is_string())
    os << v.get<std::string>();
  else
    os << v.dump();
}

}  // namespace

std::string environment_stamp() {
  std::string compiler;
#if defined(__clang__)
  compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  compiler = "gcc " __VERSION__;
#else
  compiler = "unknown compiler";
#endif
  return compiler + "; simd " + std::string(simd::isa_name(simd::kernels().isa));
}

int cmd_verify(const RunConfig& cfg, CommandIo io) {
  verify::RunOptions o;
  o.filter = cfg.get("filter");
  o.threads = unsigned(cfg.unsigned_integer("threads"));
  auto points = cfg.integer("points");
  if (points < 1) throw ConfigError("key 'points' must be at least 1");
  o.eval.points = int(points);
  o.eval.seed = cfg.unsigned_integer("seed");
  fs::path dir = prepare_run_dir(cfg, "verify");

  auto report = verify::run_all(o);
  json j = header(cfg, "verify");
  json body = json::parse(report.to_json(false));
  for (auto& [k, v] : body.items()) j[k] = v;
  write_json(dir / "report.json", j);

  json t;
  t["environment"] = environment_stamp();
  t["total_seconds"] = report.seconds;
  json rows = json::array();
  for (const auto& r : report.results)
    rows.push_back({{"name", r.name}, {"status", verify::status_label(r)}, {"seconds", r.seconds},
                    {"eval_points", r.eval_points}, {"lhs_terms", r.lhs_terms}, {"rhs_terms", r.rhs_terms}});
  t["certificates"] = std::move(rows);
  write_json(dir / "timings.json", t);

  io.out << report.summary_table();
  io.out << "report: " << (dir / "report.json").string() << '\n';
  return report.all_passed() ? Exit::ok : Exit::failure;
}

int cmd_build_catenary(const RunConfig& cfg, CommandIo io) {
  profile::CatenaryParams p;
  double c = cfg.number("c");
  double ct = cfg.number("ctilde");
  auto r = optional_number(cfg, "r");
  p.r = r ? *r : c;
  p.delta = parse_delta(cfg);
  p.gamma0 = cfg.number("gamma0");
  p.dgamma0 = cfg.number("dgamma0");
  p.form = parse_form(cfg.get("form"));
  double s0 = optional_number(cfg, "s0").value_or(0.0);
  double len = optional_number(cfg, "length").value_or(1.0);
  if (!(len > 0)) throw ConfigError("key 'length' must be positive");
  double step = positive(cfg, "step");
  double tol = positive(cfg, "tol");
  fs::path dir = prepare_run_dir(cfg, "build-catenary");

  json j = header(cfg, "build-catenary");
  auto h = profile::integrate_catenary(p, s0, s0 + len, step);
  j["samples"] = h.samples.size();
  j["step"] = h.step;
  j["truncated"] = h.truncated;
  if (h.truncated) {
    j["obstruction"] = h.flag;
    j["passed"] = false;
    write_json(dir / "report.json", j);
    io.err << "obstruction: height function truncated: " << h.flag << '\n';
    return Exit::obstruction;
  }
  double residual = profile::a_posteriori_residual(p, h);
  auto rich = profile::richardson_check(p, s0, s0 + len, step);
  j["ode_residual"] = residual;
  j["tol"] = tol;
  j["richardson"] = {{"diff_h", rich.diff_h}, {"diff_h2", rich.diff_h2}, {"order", rich.order},
                     {"estimate", rich.estimate}};
  bool passed = residual <= tol;
  int status = Exit::ok;
  json profiles = json::array();
  for (auto [name, k] : {std::pair{"profile_c.csv", c}, std::pair{"profile_ctilde.csv", ct}}) {
    auto curve = profile::reconstruct_on_spaceform(h, k);
    json e;
    e["k"] = k;
    e["file"] = name;
    e["truncated"] = curve.truncated;
    if (curve.truncated) {
      e["obstruction"] = curve.flag;
      status = Exit::obstruction;
      io.err << "obstruction: profile on Q^2(" << k << "): " << curve.flag << '\n';
    } else {
      auto inv = profile::profile_invariants(curve, h);
      e["quadric"] = inv.quadric;
      e["unit_speed"] = inv.unit_speed;
      e["height"] = inv.height;
      profile::write_profile_csv(dir / name, curve, h);
    }
    profiles.push_back(std::move(e));
  }
  j["profiles"] = std::move(profiles);
  j["passed"] = passed && status == Exit::ok;
  write_json(dir / "report.json", j);
  io.out << "catenary: " << h.samples.size() << " samples, ODE residual " << residual << " (tol " << tol
         << "), Richardson order " << rich.order << '\n';
  io.out << "report: " << (dir / "report.json").string() << '\n';
  if (status != Exit::ok) return status;
  return passed ? Exit::ok : Exit::failure;
}

int cmd_build_pair(const RunConfig& cfg, CommandIo io) { return pair_command(cfg, io, "build-pair", true); }

int cmd_check_pair(const RunConfig& cfg, CommandIo io) { return pair_command(cfg, io, "check-pair", false); }

int cmd_export(const fs::path& run_dir, CommandIo io) {
  const fs::path samples = run_dir / "samples.json";
  const fs::path report = run_dir / "report.json";
  const fs::path timings = run_dir / "timings.json";
  auto read = [](const fs::path& p) {
    std::ifstream in(p);
    return json::parse(in);
  };
  std::vector<std::string> written;

  if (fs::exists(samples)) {
    json j = read(samples);
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& c : j["columns"]) {
      os << (first ? "" : ",") << c.get<std::string>();
      first = false;
    }
    os << '\n';
    for (const auto& row : j["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        csv_cell(os, row[i]);
      }
      os << '\n';
    }
    write_text(run_dir / "residuals.csv", os.str());
    written.push_back("residuals.csv");
  }
  if (fs::exists(report)) {
    json j = read(report);
    if (j.contains("convergence")) {
      std::ostringstream os;
      os << "step,ode_residual,sum_lambda,relation\n";
      for (const auto& r : j["convergence"]["rows"]) {
        csv_cell(os, r["step"]);
        for (const char* k : {"ode_residual", "sum_lambda", "relation"}) {
          os << ',';
          csv_cell(os, r[k]);
        }
        os << '\n';
      }
      write_text(run_dir / "convergence.csv", os.str());
      written.push_back("convergence.csv");
    }
  }
  if (fs::exists(timings)) {
    json j = read(timings);
    std::ostringstream os;
    os << "name,status,seconds,eval_points,lhs_terms,rhs_terms\n";
    for (const auto& r : j["certificates"]) {
      bool first = true;
      for (const char* k : {"name", "status", "seconds", "eval_points", "lhs_terms", "rhs_terms"}) {
        if (!first) os << ',';
        csv_cell(os, r[k]);
        first = false;
      }
      os << '\n';
    }
    write_text(run_dir / "timings.csv", os.str());
    written.push_back("timings.csv");
  }

  if (written.empty()) {
    io.err << "export: nothing to export in " << run_dir.string()
           << "; expected samples.json (build-pair), report.json with a convergence table (build-pair, catenary)"
              " or timings.json (verify)\n";
    return Exit::failure;
  }
  for (const auto& w : written) io.out << (run_dir / w).string() << '\n';
  return Exit::ok;
}

int run_command(const std::string& name, const RunConfig& cfg, CommandIo io) {
  try {
    if (name == "verify") return cmd_verify(cfg, io);
    if (name == "build-catenary") return cmd_build_catenary(cfg, io);
    if (name == "build-pair") return cmd_build_pair(cfg, io);
    if (name == "check-pair") return cmd_check_pair(cfg, io);
    if (name == "export") {
      std::string run = cfg.get("run");
      if (run.empty()) throw ConfigError("export needs the run directory (key 'run')");
      return cmd_export(run, io);
    }
    io.err << "unknown subcommand '" << name << "'\n";
    return Exit::config;
  } catch (const ConfigError& e) {
    io.err << "configuration error: " << e.what() << '\n';
    return Exit::config;
  } catch (const geometry::ObstructionError& e) {
    io.err << "obstruction: " << e.what() << '\n';
    return Exit::obstruction;
  } catch (const verify::FixtureError& e) {
    io.err << "fixture error: " << e.what() << '\n';
    return Exit::config;
  } catch (const std::invalid_argument& e) {
    io.err << "configuration error: " << e.what() << '\n';
    return Exit::config;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return Exit::failure;
  }
}

}  // namespace minhyp::cli
