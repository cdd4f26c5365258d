#include "cricket/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cricket/commentary.hpp"
#include "cricket/dataset.hpp"
#include "cricket/error.hpp"
#include "cricket/evaluation.hpp"
#include "cricket/linear_model.hpp"
#include "cricket/model_io.hpp"
#include "cricket/polynomial.hpp"
#include "cricket/preprocess.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cricket::pipeline {

namespace {

json config_to_json(const PipelineConfig& c) {
  return {
      {"match_csv", c.match_csv},
      {"commentary_dir", c.commentary_dir},
      {"lexicon", c.lexicon},
      {"output_dir", c.output_dir},
      {"control_csv", c.control_csv},
      {"derived_csv", c.derived_csv},
      {"seed", c.seed},
      {"test_fraction", c.test_fraction},
      {"player", c.player},
      {"fit_scaler_on_train", c.fit_scaler_on_train},
      {"scale_label", c.scale_label},
      {"models",
       {{"polynomial",
         {{"degree", c.models.poly_degree},
          {"max_terms", c.models.poly_max_terms}}},
        {"svr",
         {{"C", c.models.svr.c},
          {"epsilon", c.models.svr.epsilon},
          {"gamma", c.models.svr.gamma},
          {"kkt_tol", c.models.svr.kkt_tol},
          {"max_passes", c.models.svr.max_passes}}},
        {"decision_tree",
         {{"min_samples_split", c.models.tree.min_samples_split},
          {"max_depth", c.models.tree.max_depth}}},
        {"random_forest",
         {{"n_trees", c.models.forest_trees},
          {"bootstrap", c.models.forest_bootstrap}}}}},
  };
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty()) return path;
  fs::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (fs::path(base_dir) / p).lexically_normal().string();
}

void require_exists(const std::string& path, const std::string& what) {
  if (path.empty()) {
    throw Error(ErrorCode::InvalidConfig, what + " path not configured");
  }
  if (!fs::exists(path)) {
    throw Error(ErrorCode::MissingInput, what + " not found: " + path);
  }
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  return out;
}

const std::vector<std::string> kModelIds = {
    "multiple_linear", "polynomial", "svr", "decision_tree", "random_forest",
};

const std::map<std::string, std::string> kModelDisplay = {
    {"multiple_linear", "Multiple Linear"},
    {"polynomial", "Polynomial"},
    {"svr", "Support Vector"},
    {"decision_tree", "Decision Tree"},
    {"random_forest", "Random Forest"},
};

}  // namespace

const std::vector<std::string>& model_ids() { return kModelIds; }

const std::string& model_display_name(const std::string& model_id) {
  auto it = kModelDisplay.find(model_id);
  if (it == kModelDisplay.end()) {
    throw Error(ErrorCode::InvalidConfig, "unknown model id " + model_id);
  }
  return it->second;
}

std::string PipelineConfig::config_hash() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    fnv1a64(config_to_json(*this).dump())));
  return buf;
}

std::string PipelineConfig::meta_line() const {
  return "# config_hash=" + config_hash() + " seed=" + std::to_string(seed);
}

PipelineConfig parse_config(const std::string& json_text,
                            const std::string& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }

  PipelineConfig c;
  try {
    c.match_csv = resolve(base_dir, j.value("match_csv", ""));
    c.commentary_dir = resolve(base_dir, j.value("commentary_dir", ""));
    c.lexicon = resolve(base_dir, j.value("lexicon", ""));
    c.output_dir = resolve(base_dir, j.value("output_dir", "out"));
    c.control_csv = resolve(base_dir, j.value("control_csv", ""));
    c.derived_csv = resolve(base_dir, j.value("derived_csv", ""));
    c.seed = j.value("seed", std::uint64_t{42});
    c.test_fraction = j.value("test_fraction", 0.25);
    c.player = j.value("player", "");
    c.fit_scaler_on_train = j.value("fit_scaler_on_train", false);
    c.scale_label = j.value("scale_label", true);
    if (j.contains("models")) {
      const json& m = j["models"];
      if (m.contains("polynomial")) {
        c.models.poly_degree = m["polynomial"].value("degree", 4);
        c.models.poly_max_terms =
            m["polynomial"].value("max_terms", std::uint64_t{100000});
      }
      if (m.contains("svr")) {
        c.models.svr.c = m["svr"].value("C", 1.0);
        c.models.svr.epsilon = m["svr"].value("epsilon", 0.1);
        c.models.svr.gamma = m["svr"].value("gamma", 0.0);
        c.models.svr.kkt_tol = m["svr"].value("kkt_tol", 1e-3);
        c.models.svr.max_passes =
            m["svr"].value("max_passes", std::size_t{10000});
      }
      if (m.contains("decision_tree")) {
        c.models.tree.min_samples_split =
            m["decision_tree"].value("min_samples_split", std::size_t{2});
        c.models.tree.max_depth =
            m["decision_tree"].value("max_depth", std::size_t{0});
      }
      if (m.contains("random_forest")) {
        c.models.forest_trees =
            m["random_forest"].value("n_trees", std::size_t{10});
        c.models.forest_bootstrap = m["random_forest"].value("bootstrap", true);
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }

  if (c.control_csv.empty()) {
    c.control_csv = (fs::path(c.output_dir) / "control.csv").string();
  }
  if (c.derived_csv.empty()) {
    c.derived_csv = (fs::path(c.output_dir) / "derived.csv").string();
  }
  return c;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::MissingInput, "cannot open config " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), fs::path(path).parent_path().string());
}

CommentarySummary run_parse_commentary(const PipelineConfig& config,
                                       std::vector<std::string>& errors) {
  require_exists(config.commentary_dir, "commentary directory");
  require_exists(config.lexicon, "lexicon");
  Lexicon lexicon = load_lexicon(config.lexicon);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(config.commentary_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw Error(ErrorCode::NoCommentaryFiles,
                "no commentary files in " + config.commentary_dir);
  }
  std::sort(files.begin(), files.end());

  CommentarySummary summary;
  std::vector<dataset::ControlRow> rows;
  for (const auto& file : files) {
    std::string match_id = file.stem().string();
    try {
      csv::Document doc = csv::read_file(file.string());
      std::size_t over_col = doc.column_index("over_ball");
      std::size_t runs_col = doc.column_index("runs");
      std::size_t text_col = doc.column_index("commentary");
      if (over_col == csv::Document::npos || runs_col == csv::Document::npos ||
          text_col == csv::Document::npos) {
        throw Error(ErrorCode::MissingColumn,
                    "header must be over_ball,runs,commentary");
      }
      std::vector<DeliveryEvent> events;
      for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        const auto& cells = doc.rows[r];
        try {
          if (cells.size() != doc.header.size()) {
            throw Error(ErrorCode::MalformedRecord,
                        "expected " + std::to_string(doc.header.size()) +
                            " fields");
          }
          events.push_back(parse_delivery(cells[over_col], cells[runs_col],
                                          cells[text_col]));
        } catch (const Error& e) {
          throw Error(e.code(),
                      std::string("row ") + std::to_string(r + 1) + ": " +
                          e.message());
        }
      }

      ShotTally tally = tally_innings(events, lexicon.shots);
      double control = compute_control(tally);

      fs::path prematch = file;
      prematch.replace_extension(".txt");
      std::string prematch_text;
      if (fs::exists(prematch)) {
        std::ifstream in(prematch);
        std::ostringstream buf;
        buf << in.rdbuf();
        prematch_text = buf.str();
      }
      WeatherResult weather = extract_weather(prematch_text, lexicon.weather);
      if (weather.defaulted) ++summary.defaulted_weather;

      dataset::ControlRow row;
      row.match_id = match_id;
      row.middled = tally.middled;
      row.left_alone = tally.left_alone;
      row.balls_faced = tally.balls_faced;
      row.control = control;
      row.weather = weather.category;
      rows.push_back(std::move(row));
      ++summary.innings;
      summary.deliveries += events.size();
    } catch (const Error& e) {
      errors.push_back(file.filename().string() + ": " + e.what());
    }
  }

  fs::create_directories(config.output_dir);
  dataset::write_control_csv(config.control_csv, rows, config.meta_line());
  return summary;
}

BuildSummary run_build_features(const PipelineConfig& config) {
  require_exists(config.match_csv, "match CSV");
  require_exists(config.control_csv, "control CSV");

  dataset::MatchCsv matches = dataset::read_match_csv(config.match_csv);
  auto controls = dataset::read_control_csv(config.control_csv);
  std::map<std::string, const dataset::ControlRow*> by_id;
  for (const auto& row : controls) by_id[row.match_id] = &row;

  BuildSummary summary;
  std::vector<dataset::DerivedRow> rows;
  std::size_t id_col = 0;
  for (std::size_t i = 0; i < matches.header.size(); ++i) {
    if (matches.header[i] == "match_id") id_col = i;
  }

  for (const auto& raw : matches.rows) {
    const std::string& match_id = raw.cells[id_col];
    auto it = by_id.find(match_id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::JoinKeyMissing,
                  "match_id " + match_id + " has no control row");
    }
    try {
      MatchRecord record = dataset::parse_match_row(matches, raw);
      record.control = it->second->control;
      record.weather = it->second->weather;
      DerivedFeatures features = build_feature_row(record);
      rows.push_back({std::move(record), features});
    } catch (const Error& e) {
      summary.exclusions.push_back(match_id + ": " + e.what());
    }
  }

  fs::create_directories(config.output_dir);
  dataset::write_derived_csv(config.derived_csv, rows, config.meta_line());
  if (!summary.exclusions.empty()) {
    std::ofstream out(config.derived_csv + ".exclusions.txt");
    for (const auto& line : summary.exclusions) out << line << '\n';
  }
  summary.written = rows.size();
  return summary;
}

namespace {

struct PlayerArtifacts {
  std::map<std::string, double> r2;  // model id -> test r2
  double baseline_r2 = 0.0;
  bool svr_converged = true;
};

// Removes every file this run created when a later stage throws.
class OutputTracker {
 public:
  void add(const std::string& path) { paths_.push_back(path); }
  void rollback() {
    for (const auto& path : paths_) {
      std::error_code ec;
      fs::remove(path, ec);
    }
  }
  const std::vector<std::string>& paths() const { return paths_; }

 private:
  std::vector<std::string> paths_;
};

PlayerArtifacts train_player(const PipelineConfig& config,
                             const FeatureTable& player_table,
                             const std::string& player,
                             OutputTracker& tracker) {
  namespace pp = cricket::preprocess;
  const std::string safe_player = sanitize_name(player);
  const fs::path outdir(config.output_dir);

  auto dropped = pp::drop_incomplete(player_table);
  auto selected = pp::select_features(dropped.table);
  auto encoded = pp::encode(selected);

  pp::SplitSpec spec{config.seed, config.test_fraction};
  pp::Split split = pp::train_test_split(encoded.n_rows(), spec);

  pp::ScalerParams scaler;
  FeatureTable train_table, test_table;
  if (config.fit_scaler_on_train) {
    auto tables = pp::apply_split(encoded, split);
    scaler = pp::fit_scaler(tables.train, config.scale_label);
    train_table = pp::apply_scaler(tables.train, scaler);
    test_table = pp::apply_scaler(tables.test, scaler);
  } else {
    // Default replicates the published flow: scale first, split after.
    scaler = pp::fit_scaler(encoded, config.scale_label);
    FeatureTable scaled = pp::apply_scaler(encoded, scaler);
    auto tables = pp::apply_split(scaled, split);
    train_table = std::move(tables.train);
    test_table = std::move(tables.test);
  }

  auto train_m = pp::to_matrix(train_table);
  auto test_m = pp::to_matrix(test_table);
  linalg::Matrix train_x = linalg::Matrix::from_rows(train_m.x);
  linalg::Matrix test_x = linalg::Matrix::from_rows(test_m.x);

  PlayerArtifacts artifacts;

  // Baseline: constant train-mean prediction scored on the test rows.
  {
    double mean = 0.0;
    for (double v : train_m.y) mean += v;
    mean /= static_cast<double>(train_m.y.size());
    std::vector<double> baseline(test_m.y.size(), mean);
    artifacts.baseline_r2 = eval::r2_score(test_m.y, baseline);
  }

  const pp::ColumnScale* label_scale =
      config.scale_label ? scaler.find("impact") : nullptr;

  auto emit = [&](const std::string& model_id,
                  const std::vector<double>& predictions,
                  std::string model_json) {
    artifacts.r2[model_id] = eval::r2_score(test_m.y, predictions);

    auto series = eval::comparison_series(test_m.y, predictions, label_scale);
    csv::Document doc;
    doc.meta.push_back(config.meta_line());
    doc.header = {"index", "actual", "predicted"};
    for (const auto& row : series) {
      doc.rows.push_back({std::to_string(row.index),
                          csv::format_double(row.actual),
                          csv::format_double(row.predicted)});
    }
    std::string series_path =
        (outdir / "series" / (safe_player + "__" + model_id + ".csv")).string();
    csv::write_file(series_path, doc);
    tracker.add(series_path);

    // Inject traceability fields; loaders ignore unknown keys.
    json j = json::parse(model_json);
    j["config_hash"] = config.config_hash();
    j["seed"] = config.seed;
    std::string model_path =
        (outdir / "models" / (safe_player + "__" + model_id + ".json"))
            .string();
    models::save_model_file(model_path, j.dump(2) + "\n");
    tracker.add(model_path);
  };

  {
    auto model = models::fit_linear(train_x, train_m.y);
    emit("multiple_linear", models::predict_linear(model, test_x),
         models::to_json(model));
  }
  {
    auto model = models::fit_poly(train_x, train_m.y, config.models.poly_degree,
                                  config.models.poly_max_terms);
    emit("polynomial", models::predict_poly(model, test_x),
         models::to_json(model));
  }
  {
    auto model = models::fit_svr(train_x, train_m.y, config.models.svr);
    artifacts.svr_converged = model.converged;
    emit("svr", models::predict_svr(model, test_x), models::to_json(model));
  }
  {
    auto model = models::fit_tree(train_x, train_m.y, config.models.tree);
    emit("decision_tree", models::predict_tree(model, test_x),
         models::to_json(model));
  }
  {
    models::ForestParams params;
    params.n_trees = config.models.forest_trees;
    params.bootstrap = config.models.forest_bootstrap;
    params.master_seed = config.seed;
    params.tree = config.models.tree;
    auto model = models::fit_forest(train_x, train_m.y, params);
    emit("random_forest", models::predict_forest(model, test_x),
         models::to_json(model));
  }

  // Split manifest: row ids per partition, test rows first.
  {
    csv::Document doc;
    doc.meta.push_back(config.meta_line());
    doc.header = {"match_id", "partition"};
    for (std::size_t idx : split.test_indices) {
      doc.rows.push_back({encoded.row_ids[idx], "test"});
    }
    for (std::size_t idx : split.train_indices) {
      doc.rows.push_back({encoded.row_ids[idx], "train"});
    }
    std::string path = (outdir / "splits" / (safe_player + ".csv")).string();
    csv::write_file(path, doc);
    tracker.add(path);
  }

  {
    std::string path = (outdir / "scalers" / (safe_player + ".csv")).string();
    pp::save_scaler(path, scaler, config.meta_line());
    tracker.add(path);
  }

  return artifacts;
}

}  // namespace

TrainSummary run_train(const PipelineConfig& config) {
  require_exists(config.derived_csv, "derived CSV");

  FeatureTable table = dataset::read_derived_table(config.derived_csv);
  std::vector<std::string> players;
  if (!config.player.empty()) {
    players.push_back(config.player);
  } else {
    std::size_t player_col = table.column_index("player");
    for (const auto& row : table.rows) {
      const std::string& p = row[player_col].text;
      if (std::find(players.begin(), players.end(), p) == players.end()) {
        players.push_back(p);
      }
    }
  }
  if (players.empty()) {
    throw Error(ErrorCode::EmptyResults,
                "derived CSV has no rows: " + config.derived_csv);
  }

  const fs::path outdir(config.output_dir);
  fs::create_directories(outdir / "models");
  fs::create_directories(outdir / "series");
  fs::create_directories(outdir / "splits");
  fs::create_directories(outdir / "scalers");

  OutputTracker tracker;
  TrainSummary summary;
  summary.players = players;

  try {
    for (const auto& player : players) {
      FeatureTable player_table = dataset::filter_player(table, player);
      if (player_table.rows.empty()) {
        throw Error(ErrorCode::MissingInput,
                    "no derived rows for player " + player);
      }
      auto artifacts = train_player(config, player_table, player, tracker);
      summary.r2[player] = artifacts.r2;
      summary.baseline_r2[player] = artifacts.baseline_r2;
      summary.svr_converged[player] = artifacts.svr_converged;
    }

    // Accuracy report, model-by-player, sorted by descending mean r2.
    std::vector<eval::ResultCell> cells;
    for (const auto& model_id : model_ids()) {
      for (const auto& player : players) {
        cells.push_back({player, model_id, summary.r2[player][model_id]});
      }
    }
    auto report = eval::accuracy_report(cells);

    {
      csv::Document doc;
      doc.meta.push_back(config.meta_line());
      doc.header = {"model"};
      for (const auto& player : report.players) doc.header.push_back(player);
      doc.header.push_back("mean");
      for (const auto& row : report.rows) {
        std::vector<std::string> cells_out = {model_display_name(row.model)};
        for (double r2 : row.per_player) {
          cells_out.push_back(eval::format_two_decimals(r2 * 100.0));
        }
        cells_out.push_back(eval::format_two_decimals(row.mean_r2 * 100.0));
        doc.rows.push_back(std::move(cells_out));
      }
      std::string path = (outdir / "report.csv").string();
      csv::write_file(path, doc);
      tracker.add(path);
    }

    {
      json j;
      j["config_hash"] = config.config_hash();
      j["seed"] = config.seed;
      j["test_fraction"] = config.test_fraction;
      j["scale_label"] = config.scale_label;
      j["fit_scaler_on_train"] = config.fit_scaler_on_train;
      j["players"] = report.players;
      json results = json::array();
      for (const auto& row : report.rows) {
        json entry;
        entry["model"] = row.model;
        entry["display_name"] = model_display_name(row.model);
        json per_player;
        for (std::size_t i = 0; i < report.players.size(); ++i) {
          per_player[report.players[i]] = row.per_player[i];
        }
        entry["per_player_r2"] = per_player;
        entry["mean_r2"] = row.mean_r2;
        results.push_back(std::move(entry));
      }
      j["results"] = results;
      j["baseline_r2"] = summary.baseline_r2;
      j["svr_converged"] = summary.svr_converged;
      std::string path = (outdir / "report.json").string();
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error(ErrorCode::MissingInput, "cannot write " + path);
      out << j.dump(2) << '\n';
      tracker.add(path);
    }
  } catch (...) {
    tracker.rollback();
    throw;
  }

  summary.outputs = tracker.paths();
  return summary;
}

void run_correlate(const PipelineConfig& config) {
  require_exists(config.derived_csv, "derived CSV");
  FeatureTable table = dataset::read_derived_table(config.derived_csv);
  if (!config.player.empty()) {
    table = dataset::filter_player(table, config.player);
  }
  auto matrix = eval::pearson_matrix(table);

  csv::Document doc;
  doc.meta.push_back(config.meta_line());
  doc.header = {"column"};
  for (const auto& label : matrix.labels) doc.header.push_back(label);
  for (std::size_t r = 0; r < matrix.labels.size(); ++r) {
    std::vector<std::string> cells = {matrix.labels[r]};
    for (double v : matrix.values[r]) cells.push_back(csv::format_double(v));
    doc.rows.push_back(std::move(cells));
  }
  fs::create_directories(config.output_dir);
  csv::write_file((fs::path(config.output_dir) / "correlation.csv").string(),
                  doc);
}

}  // namespace cricket::pipeline
