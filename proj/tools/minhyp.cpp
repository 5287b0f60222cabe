#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "minhyp/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace minhyp::cli;
  CLI::App app{"Exact certificates and numerical constructions for minimal hypersurface pairs"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file; flags override it");

  std::map<std::string, std::string> flags;
  std::map<std::string, CLI::Option*> options;
  for (const auto& k : schema()) {
    std::string key(k.key);
    std::string help(k.help);
    if (!k.fallback.empty()) help += " [" + std::string(k.fallback) + "]";
    options[key] = app.add_option("--" + key, flags[key], help);
  }
  const char* names[][2] = {
      {"verify", "run the symbolic certificates"},
      {"build-catenary", "integrate a catenary height and reconstruct its profiles"},
      {"build-pair", "build, check and export a pair of hypersurfaces"},
      {"check-pair", "build and check a pair without writing meshes"},
      {"export", "convert the artifacts of a run directory to CSV"},
  };
  for (auto& n : names) app.add_subcommand(n[0], n[1])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Exit::config;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = RunConfig::load(config_path);
    for (auto& [key, opt] : options)
      if (opt->count() > 0) cfg.set(key, flags[key]);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return Exit::config;
  }
  std::string name = app.get_subcommands().front()->get_name();
  return run_command(name, cfg, {std::cout, std::cerr});
}
