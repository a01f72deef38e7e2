#include <iostream>

#include "CLI11.hpp"
#include "bpeel/errors.hpp"
#include "bpeel/fetch.hpp"
#include "bpeel/run.hpp"

namespace {

struct Common {
  std::string input;
  std::string side = "left";
  bpeel::RunConfig config;
};

void add_run_options(CLI::App& cmd, Common& c) {
  cmd.add_option("input", c.input, "Edge list, one 'primary secondary' pair per line")->required();
  cmd.add_option("--primary-side", c.side, "Column holding the primary vertices")
      ->check(CLI::IsMember({"left", "right"}));
  cmd.add_option("--min-density", c.config.min_density, "Profile filter: minimum density")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--min-u", c.config.min_u, "Profile filter: minimum primary vertices");
  cmd.add_option("--min-v", c.config.min_v, "Profile filter: minimum secondary vertices");
  cmd.add_flag("--members", c.config.emit_members, "Write member lists of profiled nodes");
  cmd.add_flag("--timings", c.config.emit_timings, "Write phase wall times");
  cmd.add_option("--output-dir", c.config.output_dir, "Directory for output files");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Butterfly counting and bipartite peeling"};
  app.require_subcommand(1);

  Common common;
  std::string hierarchy_algorithm;
  const std::vector<std::pair<const char*, bpeel::Algorithm>> plain{
      {"count", bpeel::Algorithm::Count},
      {"tip", bpeel::Algorithm::Tip},
      {"wing", bpeel::Algorithm::Wing},
      {"core", bpeel::Algorithm::Core},
      {"frac-core", bpeel::Algorithm::FracCore},
      {"nucleus23", bpeel::Algorithm::Nucleus23},
  };
  const std::map<std::string, const char*> help{
      {"count", "Count butterflies"},
      {"tip", "Tip decomposition of the primary side"},
      {"wing", "Wing decomposition of the edges"},
      {"core", "k-core of the unweighted projection"},
      {"frac-core", "Fractional k-core of the weighted projection"},
      {"nucleus23", "(2,3)-nucleus decomposition of the projection"},
  };
  std::vector<std::pair<CLI::App*, bpeel::Algorithm>> commands;
  for (const auto& [name, algo] : plain) {
    auto* cmd = app.add_subcommand(name, help.at(name));
    add_run_options(*cmd, common);
    commands.emplace_back(cmd, algo);
  }

  auto* hierarchy = app.add_subcommand("hierarchy", "Print the filtered profile CSV of a hierarchy");
  add_run_options(*hierarchy, common);
  hierarchy->add_option("--algorithm", hierarchy_algorithm, "tip, wing, core, frac-core or nucleus23")
      ->required()
      ->check(CLI::IsMember({"tip", "wing", "core", "frac-core", "nucleus23"}));

  std::string dataset;
  std::string cache_dir;
  std::string registry_path;
  auto* fetch = app.add_subcommand("fetch", "Download a known dataset into the cache");
  fetch->add_option("name", dataset, "Dataset name")->required();
  fetch->add_option("--cache-dir", cache_dir, "Cache directory");
  fetch->add_option("--registry", registry_path, "JSON file with extra dataset entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? bpeel::kExitOk : bpeel::kExitUsage;
  }

  if (fetch->parsed()) {
    try {
      auto registry = bpeel::builtin_registry();
      if (!registry_path.empty()) {
        registry = bpeel::merge_registries(std::move(registry), bpeel::load_registry(registry_path));
      }
      const auto dir = cache_dir.empty() ? bpeel::default_cache_dir() : std::filesystem::path(cache_dir);
      const auto result = bpeel::fetch_dataset(dataset, registry, dir);
      std::cout << result.edges.string() << '\n';
      if (result.cache_hit) std::cerr << "cache hit\n";
      return bpeel::kExitOk;
    } catch (const bpeel::UnknownDatasetError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return bpeel::kExitUsage;
    } catch (const bpeel::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return bpeel::kExitRuntime;
    }
  }

  common.config.input = common.input;
  common.config.primary_side = *bpeel::parse_side(common.side);
  if (hierarchy->parsed()) {
    common.config.algorithm = *bpeel::parse_algorithm(hierarchy_algorithm);
    common.config.print_profile = true;
  } else {
    for (const auto& [cmd, algo] : commands) {
      if (cmd->parsed()) common.config.algorithm = algo;
    }
  }
  return bpeel::run(common.config, std::cout, std::cerr);
}
