#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "minhyp/cli/commands.hpp"

using namespace minhyp::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::string& cmd, const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = run_command(cmd, cfg, {out, err});
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t line_count(const fs::path& p) {
  std::ifstream f(p);
  std::string line;
  std::size_t n = 0;
  while (std::getline(f, line)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config parsing") {
    auto cfg = RunConfig::parse("# comment\nc = -1\nmode=cone   # trailing\n\ngrid = 4x3x2\n");
    CHECK(cfg.number("c") == -1);
    CHECK(cfg.get("mode") == "cone");
    CHECK(cfg.grid("grid") == std::array<int, 3>{4, 3, 2});
    CHECK(cfg.get("step") == "1e-3");
    CHECK_FALSE(cfg.has("step"));
    CHECK_THROWS_AS(RunConfig::parse("bogus = 1"), ConfigError);
    CHECK_THROWS_AS(RunConfig::parse("c"), ConfigError);
    RunConfig e;
    CHECK_THROWS_AS(e.set("nope", "1"), ConfigError);
    e.set("c", "abc");
    CHECK_THROWS_AS(e.number("c"), ConfigError);
    e.set("grid", "1x1x1");
    CHECK_THROWS_AS(e.grid("grid"), ConfigError);
    e.set("grid", "20x10");
    CHECK_THROWS_AS(e.grid("grid"), ConfigError);
  }

  TEST_CASE("run hash covers result keys only") {
    RunConfig a = RunConfig::parse("c = 1\nctilde = 0");
    RunConfig b = a;
    CHECK(a.hash("build-pair") == b.hash("build-pair"));
    CHECK(a.hash("build-pair").size() == 16);
    b.set("threads", "3");
    b.set("out", "elsewhere");
    CHECK(a.hash("build-pair") == b.hash("build-pair"));
    b.set("step", "2e-3");
    CHECK(a.hash("build-pair") != b.hash("build-pair"));
    CHECK(a.hash("build-pair") != a.hash("check-pair"));
    RunConfig m;
    m.merge(a);
    CHECK(m.hash("verify") == a.hash("verify"));
  }

  TEST_CASE("environment stamp names the active isa") {
    CHECK(environment_stamp().find("simd ") != std::string::npos);
  }

  TEST_CASE("build-pair writes artifacts and export converts them") {
    TempDir tmp("minhyp_cli_pair");
    RunConfig cfg = RunConfig::parse("mode = catenary\ngrid = 4x3x2\nmesh = 6x4x2\nconvergence = off");
    cfg.set("out", tmp.path.string());
    Run r = run("build-pair", cfg);
    CHECK(r.code == Exit::ok);
    fs::path dir = cfg.run_dir("build-pair");
    for (const char* f : {"report.json", "f.obj", "f_dual.obj", "profile_f.csv", "profile_dual.csv", "samples.json"})
      CHECK(fs::exists(dir / f));
    std::string first = slurp(dir / "report.json");
    CHECK(first.find("\"config_hash\"") != std::string::npos);
    CHECK(run("build-pair", cfg).code == Exit::ok);
    CHECK(slurp(dir / "report.json") == first);

    RunConfig ex;
    ex.set("run", dir.string());
    CHECK(run("export", ex).code == Exit::ok);
    REQUIRE(fs::exists(dir / "residuals.csv"));
    CHECK(line_count(dir / "residuals.csv") == 1 + 4 * 3 * 2);
  }

  TEST_CASE("exit codes") {
    TempDir tmp("minhyp_cli_exit");
    RunConfig base;
    base.set("out", tmp.path.string());
    base.set("grid", "4x3x2");
    base.set("convergence", "off");

    RunConfig cone = base;
    cone.set("mode", "cone");
    cone.set("c", "0");
    cone.set("ctilde", "1");
    Run r = run("build-pair", cone);
    CHECK(r.code == Exit::obstruction);
    CHECK(r.err.find("obstruction") != std::string::npos);

    RunConfig degenerate = base;
    degenerate.set("grid", "1x1x1");
    CHECK(run("check-pair", degenerate).code == Exit::config);
    CHECK_FALSE(fs::exists(degenerate.run_dir("check-pair")));

    RunConfig bad_mode = base;
    bad_mode.set("mode", "torus");
    CHECK(run("check-pair", bad_mode).code == Exit::config);

    RunConfig same = base;
    same.set("ctilde", "1");
    CHECK(run("check-pair", same).code == Exit::config);

    CHECK(run("no-such-command", base).code == Exit::config);

    RunConfig ex;
    CHECK(run("export", ex).code == Exit::config);
    TempDir empty("minhyp_cli_empty_run");
    ex.set("run", empty.path.string());
    Run e = run("export", ex);
    CHECK(e.code == Exit::failure);
    CHECK(e.err.find("report.json") != std::string::npos);

    RunConfig umb = base;
    umb.set("mode", "umbilic");
    CHECK(run("check-pair", umb).code == Exit::ok);
  }

  TEST_CASE("verify with an empty selection") {
    TempDir tmp("minhyp_cli_verify");
    RunConfig cfg;
    cfg.set("out", tmp.path.string());
    cfg.set("filter", "zzz*");
    Run r = run("verify", cfg);
    CHECK(r.code == Exit::ok);
    CHECK((r.out + r.err).find("selects no certificate") != std::string::npos);
    CHECK(fs::exists(cfg.run_dir("verify") / "report.json"));
  }

  TEST_CASE("build-catenary") {
    TempDir tmp("minhyp_cli_catenary");
    RunConfig cfg;
    cfg.set("out", tmp.path.string());
    CHECK(run("build-catenary", cfg).code == Exit::ok);
    fs::path dir = cfg.run_dir("build-catenary");
    CHECK(fs::exists(dir / "profile_c.csv"));
    CHECK(fs::exists(dir / "profile_ctilde.csv"));
    RunConfig trunc = cfg;
    trunc.set("delta", "-1");
    trunc.set("length", "5");
    CHECK(run("build-catenary", trunc).code == Exit::obstruction);
  }
}
