#include "cricket/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cricket/error.hpp"

namespace cricket::models {

namespace {

// Content-sorted row order: ties in features fall back to the target so
// the order is canonical for any input permutation of the same multiset.
std::vector<std::size_t> canonical_row_order(const linalg::Matrix& x,
                                             const std::vector<double>& y) {
  std::vector<std::size_t> order(x.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double* ra = x.row_ptr(a);
    const double* rb = x.row_ptr(b);
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (ra[c] != rb[c]) return ra[c] < rb[c];
    }
    return y[a] < y[b];
  });
  return order;
}

}  // namespace

LinearModel fit_linear(const linalg::Matrix& x, const std::vector<double>& y) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (n == 0 || p == 0) {
    throw Error(ErrorCode::EmptyMatrix,
                std::to_string(n) + "x" + std::to_string(p) + " matrix");
  }
  if (y.size() != n) {
    throw Error(ErrorCode::ShapeMismatch,
                "y has " + std::to_string(y.size()) + " entries for " +
                    std::to_string(n) + " rows");
  }
  if (!x.all_finite() ||
      !std::all_of(y.begin(), y.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::NonFiniteInput, "X or y contains NaN/Inf");
  }

  auto order = canonical_row_order(x, y);

  std::vector<double> col_mean(p, 0.0);
  double y_mean = 0.0;
  for (std::size_t i : order) {
    const double* row = x.row_ptr(i);
    for (std::size_t c = 0; c < p; ++c) col_mean[c] += row[c];
    y_mean += y[i];
  }
  for (double& m : col_mean) m /= static_cast<double>(n);
  y_mean /= static_cast<double>(n);

  linalg::Matrix centered(n, p);
  std::vector<double> y_centered(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double* src = x.row_ptr(order[k]);
    double* dst = centered.row_ptr(k);
    for (std::size_t c = 0; c < p; ++c) dst[c] = src[c] - col_mean[c];
    y_centered[k] = y[order[k]] - y_mean;
  }

  LinearModel model;
  model.coefficients = linalg::min_norm_lstsq(centered, y_centered);
  double shift = 0.0;
  for (std::size_t c = 0; c < p; ++c) {
    shift += model.coefficients[c] * col_mean[c];
  }
  model.intercept = y_mean - shift;
  return model;
}

std::vector<double> predict_linear(const LinearModel& model,
                                   const linalg::Matrix& x) {
  if (x.cols() != model.coefficients.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(x.cols()) + " features, model expects " +
                    std::to_string(model.coefficients.size()));
  }
  std::vector<double> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const double* row = x.row_ptr(r);
    double acc = model.intercept;
    for (std::size_t c = 0; c < x.cols(); ++c) {
      acc += model.coefficients[c] * row[c];
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace cricket::models
