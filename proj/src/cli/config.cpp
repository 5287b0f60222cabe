#include "minhyp/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace minhyp::cli {

const std::vector<KeySpec>& schema() {
  static const std::vector<KeySpec> keys = {
      {"out", "out", "base directory for run directories", false},
      {"run", "", "run directory read by export", false},
      {"threads", "0", "worker threads, 0 for all cores", false},
      {"seed", "24301", "seed of the random evaluation points"},
      {"points", "20", "random evaluation points per certificate"},
      {"filter", "*", "glob over certificate names"},
      {"mode", "catenary", "pair case: umbilic, catenary or cone"},
      {"c", "1", "curvature of the space form carrying f"},
      {"ctilde", "0", "curvature of the space form carrying the dual"},
      {"r", "", "catenary parameter r (defaults to c)"},
      {"delta", "1", "catenary parameter delta in {-1, 0, 1}"},
      {"gamma0", "0.5", "initial height"},
      {"dgamma0", "0", "initial slope"},
      {"form", "quadratic", "catenary r-term: quadratic or printed"},
      {"s0", "", "start of the profile interval (case default)"},
      {"length", "", "length of the profile interval (case default)"},
      {"step", "1e-3", "profile step"},
      {"cbar", "", "curvature of the cone slice (c when c > 0, else 1)"},
      {"helix_a", "0.5", "helix height A cos + B sin"},
      {"helix_b", "0", "helix height A cos + B sin"},
      {"grid", "20x10x10", "interior sample grid"},
      {"mesh", "32x16x3", "OBJ vertex grid"},
      {"derivative", "jet", "chart derivatives: jet or central"},
      {"fd_step", "1e-4", "step for central chart derivatives"},
      {"convergence", "on", "catenary convergence table: on or off"},
      {"tol", "1e-8", "catenary ODE residual tolerance"},
      {"tol_minimal", "1e-5", "sum and pattern of principal curvatures of f"},
      {"tol_metric", "", "first-form deviation (1e-8 umbilic, else 1e-6)"},
      {"tol_relation", "1e-5", "principal-curvature relation of the dual"},
      {"tol_ruling", "1e-8", "cone ruling curvature"},
      {"tol_mu", "1e-6", "mu^2 = c - ctilde for the umbilic dual"},
      {"tol_model", "1e-10", "quadric and normal contracts"},
      {"tol_gauss", "1e-4", "Gauss equation residual"},
      {"tol_order", "3.5", "minimum fitted convergence order"},
  };
  return keys;
}

namespace {

const KeySpec* find_key(std::string_view key) {
  for (const auto& k : schema())
    if (k.key == key) return &k;
  return nullptr;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

RunConfig RunConfig::parse(std::string_view text, std::string_view origin) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(std::string(origin) + ":" + std::to_string(no) + ": expected key = value");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    try {
      cfg.set(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

void RunConfig::set(std::string_view key, std::string value) {
  if (!find_key(key)) throw ConfigError("unknown key '" + std::string(key) + "'");
  values_[std::string(key)] = std::move(value);
}

void RunConfig::merge(const RunConfig& overrides) {
  for (const auto& [k, v] : overrides.values_) values_[k] = v;
}

bool RunConfig::has(std::string_view key) const { return values_.count(key) > 0; }

std::string RunConfig::get(std::string_view key) const {
  const KeySpec* spec = find_key(key);
  if (!spec) throw ConfigError("unknown key '" + std::string(key) + "'");
  auto it = values_.find(key);
  return it != values_.end() ? it->second : std::string(spec->fallback);
}

double RunConfig::number(std::string_view key) const {
  std::string v = get(key);
  double x = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size() || !std::isfinite(x))
    throw ConfigError("key '" + std::string(key) + "' expects a finite number, got '" + v + "'");
  return x;
}

std::int64_t RunConfig::integer(std::string_view key) const {
  std::string v = get(key);
  std::int64_t x = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("key '" + std::string(key) + "' expects an integer, got '" + v + "'");
  return x;
}

std::uint64_t RunConfig::unsigned_integer(std::string_view key) const {
  std::string v = get(key);
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("key '" + std::string(key) + "' expects a non-negative integer, got '" + v + "'");
  return x;
}

std::array<int, 3> RunConfig::grid(std::string_view key, int min) const {
  std::string v = get(key);
  std::array<int, 3> g{};
  const char* p = v.data();
  const char* end = v.data() + v.size();
  for (int i = 0; i < 3; ++i) {
    auto [q, ec] = std::from_chars(p, end, g[i]);
    bool sep_ok = i < 2 ? (q < end && (*q == 'x' || *q == 'X')) : q == end;
    if (ec != std::errc() || !sep_ok)
      throw ConfigError("key '" + std::string(key) + "' expects AxBxC, got '" + v + "'");
    p = q + (i < 2 ? 1 : 0);
  }
  for (int n : g)
    if (n < min)
      throw ConfigError("key '" + std::string(key) + "' = " + v + " is degenerate: every size must be at least " +
                        std::to_string(min));
  return g;
}

std::string RunConfig::canonical(std::string_view subcommand) const {
  std::string s = "subcommand=" + std::string(subcommand) + "\n";
  for (const auto& k : schema()) s += std::string(k.key) + "=" + get(k.key) + "\n";
  return s;
}

std::string RunConfig::hash(std::string_view subcommand) const {
  std::string s = "subcommand=" + std::string(subcommand) + "\n";
  for (const auto& k : schema())
    if (k.affects_results) s += std::string(k.key) + "=" + get(k.key) + "\n";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

std::filesystem::path RunConfig::run_dir(std::string_view subcommand) const {
  return std::filesystem::path(get("out")) / ("run-" + hash(subcommand));
}

}  // namespace minhyp::cli
