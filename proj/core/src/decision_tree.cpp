#include "cricket/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cricket/error.hpp"

namespace cricket::models {

namespace {

struct SplitChoice {
  bool found = false;
  int feature = -1;
  double threshold = 0.0;
  double weighted_sse = 0.0;
};

// Scores every (feature, midpoint) candidate by the summed child SSE.
// Candidates are visited feature-ascending then threshold-ascending and a
// new best must be strictly better, which implements the tie-break
// toward the lowest feature index and lowest threshold.
SplitChoice find_best_split(const linalg::Matrix& x,
                            const std::vector<double>& y,
                            const std::vector<std::size_t>& indices) {
  const std::size_t n = indices.size();
  SplitChoice best;

  std::vector<std::size_t> sorted(indices);
  std::vector<double> prefix_sum(n + 1, 0.0);
  std::vector<double> prefix_sumsq(n + 1, 0.0);

  for (std::size_t f = 0; f < x.cols(); ++f) {
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&x, f](std::size_t a, std::size_t b) {
                       return x(a, f) < x(b, f);
                     });
    for (std::size_t i = 0; i < n; ++i) {
      double yi = y[sorted[i]];
      prefix_sum[i + 1] = prefix_sum[i] + yi;
      prefix_sumsq[i + 1] = prefix_sumsq[i] + yi * yi;
    }
    const double total_sum = prefix_sum[n];
    const double total_sumsq = prefix_sumsq[n];

    for (std::size_t i = 1; i < n; ++i) {
      double lo = x(sorted[i - 1], f);
      double hi = x(sorted[i], f);
      if (lo == hi) continue;
      double threshold = lo + (hi - lo) / 2.0;

      double nl = static_cast<double>(i);
      double nr = static_cast<double>(n - i);
      double sse_left = prefix_sumsq[i] - prefix_sum[i] * prefix_sum[i] / nl;
      double sum_right = total_sum - prefix_sum[i];
      double sse_right =
          (total_sumsq - prefix_sumsq[i]) - sum_right * sum_right / nr;
      double sse = std::max(sse_left, 0.0) + std::max(sse_right, 0.0);

      if (!best.found || sse < best.weighted_sse) {
        best.found = true;
        best.feature = static_cast<int>(f);
        best.threshold = threshold;
        best.weighted_sse = sse;
      }
    }
  }
  return best;
}

class TreeBuilder {
 public:
  TreeBuilder(const linalg::Matrix& x, const std::vector<double>& y,
              const TreeParams& params)
      : x_(x), y_(y), params_(params) {}

  int build(std::vector<std::size_t> indices, std::size_t depth,
            std::vector<TreeNode>& nodes) {
    double sum = 0.0;
    bool pure = true;
    for (std::size_t idx : indices) {
      sum += y_[idx];
      if (y_[idx] != y_[indices.front()]) pure = false;
    }
    double mean = sum / static_cast<double>(indices.size());

    TreeNode node;
    node.value = mean;
    node.n_samples = indices.size();

    bool at_depth_cap = params_.max_depth > 0 && depth >= params_.max_depth;
    if (pure || indices.size() < params_.min_samples_split || at_depth_cap) {
      nodes.push_back(node);
      return static_cast<int>(nodes.size() - 1);
    }

    SplitChoice split = find_best_split(x_, y_, indices);
    if (!split.found) {  // all feature values identical inside the node
      nodes.push_back(node);
      return static_cast<int>(nodes.size() - 1);
    }

    std::vector<std::size_t> left, right;
    for (std::size_t idx : indices) {
      if (x_(idx, static_cast<std::size_t>(split.feature)) <=
          split.threshold) {
        left.push_back(idx);
      } else {
        right.push_back(idx);
      }
    }

    node.feature = split.feature;
    node.threshold = split.threshold;
    nodes.push_back(node);
    int self = static_cast<int>(nodes.size() - 1);
    int left_id = build(std::move(left), depth + 1, nodes);
    int right_id = build(std::move(right), depth + 1, nodes);
    nodes[self].left = left_id;
    nodes[self].right = right_id;
    return self;
  }

 private:
  const linalg::Matrix& x_;
  const std::vector<double>& y_;
  const TreeParams& params_;
};

// Content-sorted order; duplicates stay adjacent so every downstream sum
// is independent of the caller's row order.
std::vector<std::size_t> canonical_order(const linalg::Matrix& x,
                                         const std::vector<double>& y,
                                         std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end(),
            [&](std::size_t a, std::size_t b) {
              const double* ra = x.row_ptr(a);
              const double* rb = x.row_ptr(b);
              for (std::size_t c = 0; c < x.cols(); ++c) {
                if (ra[c] != rb[c]) return ra[c] < rb[c];
              }
              return y[a] < y[b];
            });
  return indices;
}

void check_inputs(const linalg::Matrix& x, const std::vector<double>& y) {
  if (x.rows() == 0 || x.cols() == 0) {
    throw Error(ErrorCode::EmptyMatrix,
                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  if (y.size() != x.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "y has " + std::to_string(y.size()) + " entries for " +
                    std::to_string(x.rows()) + " rows");
  }
  if (!x.all_finite() ||
      !std::all_of(y.begin(), y.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::NonFiniteInput, "X or y contains NaN/Inf");
  }
}

}  // namespace

TreeModel fit_tree_on(const linalg::Matrix& x, const std::vector<double>& y,
                      const std::vector<std::size_t>& sample,
                      const TreeParams& params) {
  check_inputs(x, y);
  if (sample.empty()) {
    throw Error(ErrorCode::EmptyMatrix, "empty training sample");
  }
  TreeModel model;
  model.n_features = x.cols();
  model.params = params;
  TreeBuilder builder(x, y, params);
  builder.build(canonical_order(x, y, sample), 0, model.nodes);
  return model;
}

TreeModel fit_tree(const linalg::Matrix& x, const std::vector<double>& y,
                   const TreeParams& params) {
  std::vector<std::size_t> all(x.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return fit_tree_on(x, y, all, params);
}

double predict_tree_row(const TreeModel& model, const double* row) {
  int node = 0;
  while (model.nodes[static_cast<std::size_t>(node)].feature >= 0) {
    const TreeNode& cur = model.nodes[static_cast<std::size_t>(node)];
    node = row[static_cast<std::size_t>(cur.feature)] <= cur.threshold
               ? cur.left
               : cur.right;
  }
  return model.nodes[static_cast<std::size_t>(node)].value;
}

std::vector<double> predict_tree(const TreeModel& model,
                                 const linalg::Matrix& x) {
  if (model.empty()) {
    throw Error(ErrorCode::EmptyMatrix, "tree has no nodes");
  }
  if (x.cols() != model.n_features) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(x.cols()) + " features, model expects " +
                    std::to_string(model.n_features));
  }
  std::vector<double> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    out[r] = predict_tree_row(model, x.row_ptr(r));
  }
  return out;
}

RootSplit best_root_split(const linalg::Matrix& x,
                          const std::vector<double>& y) {
  check_inputs(x, y);
  std::vector<std::size_t> all(x.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  auto choice = find_best_split(x, y, canonical_order(x, y, all));
  return {choice.found, choice.feature, choice.threshold,
          choice.weighted_sse};
}

}  // namespace cricket::models
