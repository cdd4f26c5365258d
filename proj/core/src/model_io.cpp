#include "cricket/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cricket/error.hpp"

namespace cricket::models {

namespace {

using nlohmann::json;

json matrix_to_json(const linalg::Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

linalg::Matrix matrix_from_json(const json& rows, std::size_t cols_hint) {
  std::vector<std::vector<double>> data;
  for (const auto& row : rows) {
    data.push_back(row.get<std::vector<double>>());
  }
  if (data.empty()) return linalg::Matrix(0, cols_hint);
  return linalg::Matrix::from_rows(data);
}

json linear_body(const LinearModel& model) {
  return {{"coefficients", model.coefficients},
          {"intercept", model.intercept}};
}

LinearModel linear_from_body(const json& j) {
  LinearModel model;
  model.coefficients = j.at("coefficients").get<std::vector<double>>();
  model.intercept = j.at("intercept").get<double>();
  return model;
}

json tree_body(const TreeModel& model) {
  json nodes = json::array();
  for (const auto& node : model.nodes) {
    nodes.push_back({{"feature", node.feature},
                     {"threshold", node.threshold},
                     {"left", node.left},
                     {"right", node.right},
                     {"value", node.value},
                     {"n_samples", node.n_samples}});
  }
  return {{"nodes", std::move(nodes)},
          {"n_features", model.n_features},
          {"min_samples_split", model.params.min_samples_split},
          {"max_depth", model.params.max_depth}};
}

TreeModel tree_from_body(const json& j) {
  TreeModel model;
  model.n_features = j.at("n_features").get<std::size_t>();
  model.params.min_samples_split = j.at("min_samples_split").get<std::size_t>();
  model.params.max_depth = j.at("max_depth").get<std::size_t>();
  for (const auto& node_json : j.at("nodes")) {
    TreeNode node;
    node.feature = node_json.at("feature").get<int>();
    node.threshold = node_json.at("threshold").get<double>();
    node.left = node_json.at("left").get<int>();
    node.right = node_json.at("right").get<int>();
    node.value = node_json.at("value").get<double>();
    node.n_samples = node_json.at("n_samples").get<std::size_t>();
    model.nodes.push_back(node);
  }
  return model;
}

std::string dump(json j, const char* kind) {
  j["format_version"] = kModelFormatVersion;
  j["kind"] = kind;
  return j.dump(2) + "\n";
}

json parse_checked(const std::string& text, const char* expected_kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, e.what());
  }
  if (!j.contains("format_version") ||
      j["format_version"].get<int>() != kModelFormatVersion) {
    throw Error(ErrorCode::MalformedRecord, "unsupported model format version");
  }
  if (!j.contains("kind") || j["kind"].get<std::string>() != expected_kind) {
    throw Error(ErrorCode::MalformedRecord,
                std::string("expected a ") + expected_kind + " model file");
  }
  return j;
}

}  // namespace

std::string to_json(const LinearModel& model) {
  return dump(linear_body(model), "linear");
}

std::string to_json(const PolyModel& model) {
  json j = {{"degree", model.degree},
            {"n_features", model.n_features},
            {"term_exponents", model.term_exponents},
            {"core", linear_body(model.core)}};
  return dump(std::move(j), "polynomial");
}

std::string to_json(const TreeModel& model) {
  return dump(tree_body(model), "decision_tree");
}

std::string to_json(const ForestModel& model) {
  json trees = json::array();
  for (const auto& tree : model.trees) trees.push_back(tree_body(tree));
  json j = {{"trees", std::move(trees)},
            {"n_trees", model.params.n_trees},
            {"bootstrap", model.params.bootstrap},
            {"master_seed", model.params.master_seed},
            {"min_samples_split", model.params.tree.min_samples_split},
            {"max_depth", model.params.tree.max_depth},
            {"n_features", model.n_features}};
  return dump(std::move(j), "random_forest");
}

std::string to_json(const SvrModel& model) {
  json j = {{"support_vectors", matrix_to_json(model.support_vectors)},
            {"dual_coefficients", model.dual_coefficients},
            {"bias", model.bias},
            {"C", model.c},
            {"epsilon", model.epsilon},
            {"gamma", model.gamma},
            {"n_features", model.n_features},
            {"converged", model.converged}};
  return dump(std::move(j), "svr");
}

std::string model_kind(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    return j.at("kind").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, e.what());
  }
}

LinearModel linear_from_json(const std::string& json_text) {
  return linear_from_body(parse_checked(json_text, "linear"));
}

PolyModel poly_from_json(const std::string& json_text) {
  json j = parse_checked(json_text, "polynomial");
  PolyModel model;
  model.degree = j.at("degree").get<int>();
  model.n_features = j.at("n_features").get<std::size_t>();
  model.term_exponents =
      j.at("term_exponents").get<std::vector<std::vector<int>>>();
  model.core = linear_from_body(j.at("core"));
  return model;
}

TreeModel tree_from_json(const std::string& json_text) {
  return tree_from_body(parse_checked(json_text, "decision_tree"));
}

ForestModel forest_from_json(const std::string& json_text) {
  json j = parse_checked(json_text, "random_forest");
  ForestModel model;
  model.params.n_trees = j.at("n_trees").get<std::size_t>();
  model.params.bootstrap = j.at("bootstrap").get<bool>();
  model.params.master_seed = j.at("master_seed").get<std::uint64_t>();
  model.params.tree.min_samples_split =
      j.at("min_samples_split").get<std::size_t>();
  model.params.tree.max_depth = j.at("max_depth").get<std::size_t>();
  model.n_features = j.at("n_features").get<std::size_t>();
  for (const auto& tree_json : j.at("trees")) {
    model.trees.push_back(tree_from_body(tree_json));
  }
  return model;
}

SvrModel svr_from_json(const std::string& json_text) {
  json j = parse_checked(json_text, "svr");
  SvrModel model;
  model.n_features = j.at("n_features").get<std::size_t>();
  model.support_vectors =
      matrix_from_json(j.at("support_vectors"), model.n_features);
  model.dual_coefficients =
      j.at("dual_coefficients").get<std::vector<double>>();
  model.bias = j.at("bias").get<double>();
  model.c = j.at("C").get<double>();
  model.epsilon = j.at("epsilon").get<double>();
  model.gamma = j.at("gamma").get<double>();
  model.converged = j.at("converged").get<bool>();
  return model;
}

void save_model_file(const std::string& path, const std::string& json_text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::MissingInput, "cannot write " + path);
  }
  out << json_text;
}

std::string load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::MissingInput, "cannot open model " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cricket::models
