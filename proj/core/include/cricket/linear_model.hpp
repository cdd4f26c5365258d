#pragma once

#include <vector>

#include "cricket/linalg.hpp"

namespace cricket::models {

struct LinearModel {
  std::vector<double> coefficients;  // one per feature
  double intercept = 0.0;
};

/// Ordinary least squares minimizing ||y - X b - intercept||^2. Columns
/// are centered and the reduced problem is solved by minimum-norm least
/// squares, so rank-deficient inputs (duplicated columns, p > n) succeed.
/// Rows are accumulated in a content-sorted order, making the fit
/// independent of input row order. Throws Error{EmptyMatrix} and
/// Error{NonFiniteInput}.
LinearModel fit_linear(const linalg::Matrix& x, const std::vector<double>& y);

/// X b + intercept. Throws Error{ShapeMismatch} on column count mismatch.
std::vector<double> predict_linear(const LinearModel& model,
                                   const linalg::Matrix& x);

}  // namespace cricket::models
