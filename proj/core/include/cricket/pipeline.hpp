#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cricket/decision_tree.hpp"
#include "cricket/random_forest.hpp"
#include "cricket/svr.hpp"

namespace cricket::pipeline {

struct ModelConfigs {
  int poly_degree = 4;
  std::uint64_t poly_max_terms = 100000;
  models::SvrParams svr;
  models::TreeParams tree;
  std::size_t forest_trees = 10;
  bool forest_bootstrap = true;
};

/// Everything a stage needs: file paths, the split seed, per-model
/// hyperparameters and the scaling flags. Loaded from a JSON config file
/// (paths resolve relative to the config file's directory); command-line
/// overrides are applied before hashing.
struct PipelineConfig {
  std::string match_csv;
  std::string commentary_dir;
  std::string lexicon;
  std::string output_dir = "out";
  std::string control_csv;  // defaults to <output_dir>/control.csv
  std::string derived_csv;  // defaults to <output_dir>/derived.csv

  std::uint64_t seed = 42;
  double test_fraction = 0.25;
  std::string player;  // empty = every player in the derived CSV
  bool fit_scaler_on_train = false;
  bool scale_label = true;
  ModelConfigs models;

  /// FNV-1a over the canonical JSON dump of the effective config.
  std::string config_hash() const;
  /// "# config_hash=<hex> seed=<n>" preamble for CSV outputs.
  std::string meta_line() const;
};

PipelineConfig load_config(const std::string& path);
PipelineConfig parse_config(const std::string& json_text,
                            const std::string& base_dir);

struct CommentarySummary {
  std::size_t innings = 0;
  std::size_t deliveries = 0;
  std::size_t defaulted_weather = 0;
};

/// parse-commentary: reads every <match_id>.csv in commentary_dir
/// (over_ball,runs,commentary), classifies deliveries with the lexicon,
/// joins the optional <match_id>.txt pre-match blurb for weather, and
/// writes the per-innings control CSV. Parse problems are collected per
/// file/row into `errors`; any error means the control CSV is still
/// written for the clean innings but the command exits nonzero.
CommentarySummary run_parse_commentary(const PipelineConfig& config,
                                       std::vector<std::string>& errors);

struct BuildSummary {
  std::size_t written = 0;
  std::vector<std::string> exclusions;  // "match_id: reason" lines
};

/// build-features: joins the match CSV with the control CSV on match_id
/// (a match row without a control row is a hard Error{JoinKeyMissing}),
/// derives every computed column plus impact, and writes the derived
/// CSV. Rows failing invariants are excluded and listed.
BuildSummary run_build_features(const PipelineConfig& config);

struct TrainSummary {
  std::vector<std::string> players;
  // player -> model id -> test r2
  std::map<std::string, std::map<std::string, double>> r2;
  std::map<std::string, double> baseline_r2;  // train-mean predictor
  std::map<std::string, bool> svr_converged;
  std::vector<std::string> outputs;  // files written
};

/// train: per player — preprocess, split, fit the five regressors, score
/// on the held-out rows, and emit the accuracy report (CSV + JSON),
/// comparison series, serialized models, split manifest and scaler
/// sidecar. Partial outputs are removed when a stage fails.
TrainSummary run_train(const PipelineConfig& config);

/// correlate: Pearson matrix over the numeric derived columns, written
/// as a labeled CSV.
void run_correlate(const PipelineConfig& config);

/// Canonical model identifiers in training order.
const std::vector<std::string>& model_ids();
const std::string& model_display_name(const std::string& model_id);

}  // namespace cricket::pipeline
