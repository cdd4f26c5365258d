// cricket-impact: stage-oriented driver for the batter-impact pipeline.
// Each subcommand reads and writes documented flat files, so downstream
// stages can be re-run without repeating upstream work.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cricket/error.hpp"
#include "cricket/pipeline.hpp"

namespace {

struct Overrides {
  std::uint64_t seed = 0;
  bool seed_set = false;
  double test_fraction = 0.0;
  bool test_fraction_set = false;
  std::string player;
  bool fit_on_train = false;
};

void apply(const Overrides& o, cricket::pipeline::PipelineConfig& config) {
  if (o.seed_set) config.seed = o.seed;
  if (o.test_fraction_set) config.test_fraction = o.test_fraction;
  if (!o.player.empty()) config.player = o.player;
  if (o.fit_on_train) config.fit_scaler_on_train = true;
}

void add_common_options(CLI::App* cmd, std::string& config_path,
                        Overrides& overrides) {
  cmd->add_option("--config", config_path, "Pipeline config file (JSON)")
      ->required();
  cmd->add_option("--seed", overrides.seed, "Override the split seed")
      ->each([&overrides](const std::string&) { overrides.seed_set = true; });
  cmd->add_option("--test-fraction", overrides.test_fraction,
                  "Override the held-out fraction")
      ->each([&overrides](const std::string&) {
        overrides.test_fraction_set = true;
      });
  cmd->add_option("--player", overrides.player,
                  "Restrict the stage to one player");
  cmd->add_flag("--fit-on-train", overrides.fit_on_train,
                "Fit the scaler on training rows only (leakage-free "
                "alternative to the default full-dataset fit)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batter impact analytics: commentary parsing, feature "
               "engineering, five regression models and reports"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides overrides;

  CLI::App* parse_cmd = app.add_subcommand(
      "parse-commentary",
      "Parse ball-by-ball commentary into per-innings control rows");
  CLI::App* build_cmd = app.add_subcommand(
      "build-features",
      "Join match rows with control rows and derive every feature column");
  CLI::App* train_cmd = app.add_subcommand(
      "train", "Preprocess, split, fit the five regressors and report R^2");
  CLI::App* correlate_cmd = app.add_subcommand(
      "correlate", "Pearson correlation matrix over the derived columns");
  for (CLI::App* cmd : {parse_cmd, build_cmd, train_cmd, correlate_cmd}) {
    add_common_options(cmd, config_path, overrides);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    auto config = cricket::pipeline::load_config(config_path);
    apply(overrides, config);

    if (parse_cmd->parsed()) {
      std::vector<std::string> errors;
      auto summary = cricket::pipeline::run_parse_commentary(config, errors);
      std::cerr << "parsed " << summary.innings << " innings ("
                << summary.deliveries << " deliveries), defaulted weather on "
                << summary.defaulted_weather << " innings\n";
      for (const auto& error : errors) {
        std::cerr << "error: " << error << '\n';
      }
      if (!errors.empty()) return EXIT_FAILURE;
      std::cout << config.control_csv << '\n';
    } else if (build_cmd->parsed()) {
      auto summary = cricket::pipeline::run_build_features(config);
      std::cerr << "wrote " << summary.written << " derived rows, excluded "
                << summary.exclusions.size() << '\n';
      for (const auto& line : summary.exclusions) {
        std::cerr << "excluded: " << line << '\n';
      }
      std::cout << config.derived_csv << '\n';
    } else if (train_cmd->parsed()) {
      auto summary = cricket::pipeline::run_train(config);
      for (const auto& [player, converged] : summary.svr_converged) {
        if (!converged) {
          std::cerr << "warning: SVR pass cap reached before the KKT "
                       "tolerance for "
                    << player << "; model is the best iterate\n";
        }
      }
      std::cerr << "trained " << summary.players.size() << " player(s), wrote "
                << summary.outputs.size() << " files under "
                << config.output_dir << '\n';
      std::cout << config.output_dir << "/report.csv" << '\n';
    } else if (correlate_cmd->parsed()) {
      cricket::pipeline::run_correlate(config);
      std::cout << config.output_dir << "/correlation.csv" << '\n';
    }
  } catch (const cricket::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
