#pragma once

#include <cstdint>
#include <vector>

#include "cricket/decision_tree.hpp"

namespace cricket::models {

struct ForestParams {
  std::size_t n_trees = 10;
  bool bootstrap = true;
  std::uint64_t master_seed = 42;
  TreeParams tree;
};

struct ForestModel {
  std::vector<TreeModel> trees;
  ForestParams params;
  std::size_t n_features = 0;
};

/// Bagged CART trees: each tree trains on n draws with replacement from
/// the rows (per-tree generator seeded from hash(master_seed, index)),
/// every feature is considered at every split, and the forest predicts
/// the arithmetic mean of its trees. With bootstrap off every tree sees
/// the full sample. Throws Error{EmptyMatrix} and Error{NonFiniteInput}.
ForestModel fit_forest(const linalg::Matrix& x, const std::vector<double>& y,
                       const ForestParams& params = {});

std::vector<double> predict_forest(const ForestModel& model,
                                   const linalg::Matrix& x);

}  // namespace cricket::models
