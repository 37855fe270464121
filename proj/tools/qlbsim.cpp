#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qlb/config.hpp"
#include "qlb/runner.hpp"

namespace {

int fail(const std::string& kind, const std::vector<std::string>& details) {
  nlohmann::json j;
  j["error"] = kind;
  j["details"] = details;
  std::cerr << j.dump(2) << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlbsim: collision-kernel and quantum-trajectory simulator for a "
               "test particle in an ideal gas"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  int threads = 1;
  std::uint64_t seed_override = 0;
  bool have_seed = false;

  std::vector<std::pair<CLI::App*, qlb::ExperimentKind>> subs;
  for (auto kind : {qlb::ExperimentKind::Thermalize, qlb::ExperimentKind::RelaxMoments,
                    qlb::ExperimentKind::DecohereMomentum,
                    qlb::ExperimentKind::DecoherePosition, qlb::ExperimentKind::Visibility,
                    qlb::ExperimentKind::Refraction, qlb::ExperimentKind::StructureFactor,
                    qlb::ExperimentKind::BrownianCheck}) {
    CLI::App* sub = app.add_subcommand(qlb::to_string(kind));
    sub->add_option("--config", config_path, "experiment config file")->required();
    sub->add_option("--seed", seed_override, "override the config seed")
        ->each([&](const std::string&) { have_seed = true; });
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", out_dir, "output directory");
    subs.emplace_back(sub, kind);
  }

  CLI11_PARSE(app, argc, argv);

  qlb::ExperimentKind kind = qlb::ExperimentKind::Thermalize;
  for (auto& [sub, k] : subs)
    if (sub->parsed()) kind = k;

  try {
    qlb::ExperimentConfig config = qlb::parse_config_file(config_path);
    if (config.kind != kind)
      return fail("experiment-mismatch",
                  {std::string("config declares '") + qlb::to_string(config.kind) +
                   "' but subcommand is '" + qlb::to_string(kind) + "'"});
    if (have_seed) {
      config.seed = seed_override;
      config.raw["seed"] = std::to_string(seed_override);
    }
    qlb::RunResult res = qlb::run_experiment(config, out_dir, threads);
    std::cout << res.csv_path << "\n" << res.meta_path << "\n";
    return 0;
  } catch (const qlb::ConfigError& e) {
    return fail("invalid-config", e.violations());
  } catch (const std::exception& e) {
    return fail("runtime-error", {e.what()});
  }
}
