#include "cricket/random_forest.hpp"

#include <algorithm>
#include <numeric>

#include "cricket/error.hpp"
#include "cricket/rng.hpp"

namespace cricket::models {

ForestModel fit_forest(const linalg::Matrix& x, const std::vector<double>& y,
                       const ForestParams& params) {
  if (params.n_trees == 0) {
    throw Error(ErrorCode::InvalidConfig, "n_trees must be >= 1");
  }
  if (x.rows() == 0 || x.cols() == 0) {
    throw Error(ErrorCode::EmptyMatrix,
                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }

  const std::size_t n = x.rows();

  // Bootstrap draws index *positions* in a content-sorted order, so the
  // sampled multiset does not depend on the caller's row order.
  std::vector<std::size_t> canonical(n);
  std::iota(canonical.begin(), canonical.end(), std::size_t{0});
  std::sort(canonical.begin(), canonical.end(),
            [&](std::size_t a, std::size_t b) {
              const double* ra = x.row_ptr(a);
              const double* rb = x.row_ptr(b);
              for (std::size_t c = 0; c < x.cols(); ++c) {
                if (ra[c] != rb[c]) return ra[c] < rb[c];
              }
              return y[a] < y[b];
            });

  ForestModel model;
  model.params = params;
  model.n_features = x.cols();
  model.trees.reserve(params.n_trees);

  for (std::size_t t = 0; t < params.n_trees; ++t) {
    std::vector<std::size_t> sample;
    if (params.bootstrap) {
      SplitMix64 rng(derive_seed(params.master_seed, t));
      sample.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        sample.push_back(canonical[rng.bounded(n)]);
      }
    } else {
      sample = canonical;
    }
    model.trees.push_back(fit_tree_on(x, y, sample, params.tree));
  }
  return model;
}

std::vector<double> predict_forest(const ForestModel& model,
                                   const linalg::Matrix& x) {
  if (model.trees.empty()) {
    throw Error(ErrorCode::EmptyMatrix, "forest has no trees");
  }
  if (x.cols() != model.n_features) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(x.cols()) + " features, model expects " +
                    std::to_string(model.n_features));
  }
  std::vector<double> out(x.rows(), 0.0);
  for (const auto& tree : model.trees) {
    for (std::size_t r = 0; r < x.rows(); ++r) {
      out[r] += predict_tree_row(tree, x.row_ptr(r));
    }
  }
  const double count = static_cast<double>(model.trees.size());
  for (double& v : out) v /= count;
  return out;
}

}  // namespace cricket::models
