#pragma once

#include <string>

#include "cricket/linear_model.hpp"
#include "cricket/polynomial.hpp"
#include "cricket/random_forest.hpp"
#include "cricket/svr.hpp"

namespace cricket::models {

/// Self-describing JSON serialization for every model kind. Each file
/// carries a format_version and a kind tag; doubles are written in their
/// shortest round-trip form so predictions survive a save/load cycle
/// bit-exactly.
inline constexpr int kModelFormatVersion = 1;

std::string to_json(const LinearModel& model);
std::string to_json(const PolyModel& model);
std::string to_json(const TreeModel& model);
std::string to_json(const ForestModel& model);
std::string to_json(const SvrModel& model);

/// Peeks at the "kind" field: "linear", "polynomial", "decision_tree",
/// "random_forest" or "svr". Throws Error{MalformedRecord}.
std::string model_kind(const std::string& json_text);

LinearModel linear_from_json(const std::string& json_text);
PolyModel poly_from_json(const std::string& json_text);
TreeModel tree_from_json(const std::string& json_text);
ForestModel forest_from_json(const std::string& json_text);
SvrModel svr_from_json(const std::string& json_text);

void save_model_file(const std::string& path, const std::string& json_text);
std::string load_model_file(const std::string& path);

}  // namespace cricket::models
