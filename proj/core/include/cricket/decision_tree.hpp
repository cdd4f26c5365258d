#pragma once

#include <cstddef>
#include <vector>

#include "cricket/linalg.hpp"

namespace cricket::models {

struct TreeParams {
  std::size_t min_samples_split = 2;
  std::size_t max_depth = 0;  // 0 = unlimited
};

/// Flat binary CART tree. Internal nodes route rows left when
/// x[feature] <= threshold; leaves predict the mean of their training
/// targets.
struct TreeNode {
  int feature = -1;          // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;        // leaf prediction
  std::size_t n_samples = 0;
};

struct TreeModel {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::size_t n_features = 0;
  TreeParams params;

  bool empty() const { return nodes.empty(); }
};

/// Greedy CART fit: at each node every feature and every midpoint between
/// consecutive distinct sorted values is scored by the weighted child sum
/// of squared deviations; ties break toward the lowest feature index,
/// then the lowest threshold. A node becomes a leaf when it is pure,
/// smaller than min_samples_split, or at max_depth. Rows are processed in
/// content-sorted order so the fit is independent of input row order.
/// Throws Error{EmptyMatrix} and Error{NonFiniteInput}.
TreeModel fit_tree(const linalg::Matrix& x, const std::vector<double>& y,
                   const TreeParams& params = {});

/// Variant used by the forest: fits on the rows named by `sample`
/// (duplicates allowed, the bootstrap case).
TreeModel fit_tree_on(const linalg::Matrix& x, const std::vector<double>& y,
                      const std::vector<std::size_t>& sample,
                      const TreeParams& params);

std::vector<double> predict_tree(const TreeModel& model,
                                 const linalg::Matrix& x);
double predict_tree_row(const TreeModel& model, const double* row);

/// The root split chosen by the same scoring as fit_tree, if any split
/// exists; used by diagnostics and oracle tests.
struct RootSplit {
  bool found = false;
  int feature = -1;
  double threshold = 0.0;
  double weighted_sse = 0.0;
};
RootSplit best_root_split(const linalg::Matrix& x,
                          const std::vector<double>& y);

}  // namespace cricket::models
