#pragma once

#include <cstddef>
#include <vector>

#include "cricket/linalg.hpp"

namespace cricket::models {

struct SvrParams {
  double c = 1.0;
  double epsilon = 0.1;
  double gamma = 0.0;   // <= 0 selects 1 / (n_features * var(X))
  double kkt_tol = 1e-3;
  std::size_t max_passes = 10000;  // one pass = one pair update
};

struct SvrModel {
  linalg::Matrix support_vectors;        // rows with nonzero dual coef
  std::vector<double> dual_coefficients; // in [-C, C]
  double bias = 0.0;
  double c = 1.0;
  double epsilon = 0.1;
  double gamma = 1.0;
  std::size_t n_features = 0;
  bool converged = true;  // false when the pass cap was hit first
};

/// Per-fit diagnostics; pass to fit_svr to record them.
struct SvrFitInfo {
  std::size_t passes = 0;
  double final_violation = 0.0;
  std::vector<double> objective_trace;  // dual objective after each pass
};

/// Epsilon-insensitive support vector regression in the dual with an RBF
/// kernel k(u,v) = exp(-gamma * ||u-v||^2). The equality-constrained dual
/// is maximized by pairwise coordinate ascent over the maximally
/// KKT-violating pair, with an exact piecewise-quadratic line search per
/// pair, until the violation falls below kkt_tol or max_passes is hit.
/// Hitting the cap returns the best iterate with converged=false, never
/// silently. The bias is averaged over free support vectors. Throws
/// Error{TooFewRows}, Error{InvalidConfig}, Error{NonFiniteInput}.
SvrModel fit_svr(const linalg::Matrix& x, const std::vector<double>& y,
                 const SvrParams& params = {}, SvrFitInfo* info = nullptr);

std::vector<double> predict_svr(const SvrModel& model,
                                const linalg::Matrix& x);

double rbf_kernel(const double* u, const double* v, std::size_t dim,
                  double gamma);

/// The library's default gamma: 1 / (n_features * population variance of
/// all matrix entries); falls back to 1 / n_features for a constant X.
double default_gamma(const linalg::Matrix& x);

}  // namespace cricket::models
