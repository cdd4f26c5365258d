#include "cricket/svr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cricket/error.hpp"

namespace cricket::models {

double rbf_kernel(const double* u, const double* v, std::size_t dim,
                  double gamma) {
  double dist2 = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    double d = u[k] - v[k];
    dist2 += d * d;
  }
  return std::exp(-gamma * dist2);
}

double default_gamma(const linalg::Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  const double count = static_cast<double>(n * p);
  double mean = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x.row_ptr(r);
    for (std::size_t c = 0; c < p; ++c) mean += row[c];
  }
  mean /= count;
  double var = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x.row_ptr(r);
    for (std::size_t c = 0; c < p; ++c) {
      double d = row[c] - mean;
      var += d * d;
    }
  }
  var /= count;
  if (var <= 0.0) return 1.0 / static_cast<double>(p);
  return 1.0 / (static_cast<double>(p) * var);
}

namespace {

// Ascent gain for increasing beta_i by dt (the |beta| subgradient from
// the right), and the matching cost for decreasing beta_j.
inline double up_value(double g, double beta, double eps) {
  return beta >= 0.0 ? g - eps : g + eps;
}
inline double down_value(double g, double beta, double eps) {
  return beta <= 0.0 ? g + eps : g - eps;
}

struct PairGain {
  double t = 0.0;
  double delta = 0.0;  // objective improvement at t
};

// Maximizes  t*(gi - gj) - eta*t^2/2 - eps*(|bi+t| - |bi|) - eps*(|bj-t| - |bj|)
// over t in [0, t_max]. The objective is piecewise quadratic with kinks
// where beta_i + t or beta_j - t crosses zero; every interval stationary
// point and boundary is evaluated exactly.
PairGain line_search(double gi, double gj, double eta, double bi, double bj,
                     double eps, double t_max) {
  auto objective = [&](double t) {
    return t * (gi - gj) - 0.5 * eta * t * t -
           eps * (std::abs(bi + t) - std::abs(bi)) -
           eps * (std::abs(bj - t) - std::abs(bj));
  };

  std::vector<double> knots = {0.0, t_max};
  if (bi < 0.0 && -bi < t_max) knots.push_back(-bi);
  if (bj > 0.0 && bj < t_max) knots.push_back(bj);
  std::sort(knots.begin(), knots.end());

  PairGain best;  // t = 0, delta = 0
  for (std::size_t k = 0; k + 1 <= knots.size(); ++k) {
    double t = knots[k];
    double value = objective(t);
    if (value > best.delta) best = {t, value};
    if (k + 1 == knots.size()) break;

    double lo = knots[k];
    double hi = knots[k + 1];
    if (!(hi > lo)) continue;
    double mid = lo + (hi - lo) / 2.0;
    double si = bi + mid >= 0.0 ? 1.0 : -1.0;
    double sj = bj - mid >= 0.0 ? 1.0 : -1.0;
    // d/dt on this interval: (gi - gj) - eta*t - eps*si + eps*sj
    if (eta > 0.0) {
      double t_star = (gi - gj - eps * si + eps * sj) / eta;
      if (t_star > lo && t_star < hi) {
        double value_star = objective(t_star);
        if (value_star > best.delta) best = {t_star, value_star};
      }
    }
  }
  return best;
}

}  // namespace

SvrModel fit_svr(const linalg::Matrix& x, const std::vector<double>& y,
                 const SvrParams& params, SvrFitInfo* info) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (n < 2) {
    throw Error(ErrorCode::TooFewRows, "SVR needs at least 2 rows");
  }
  if (p == 0) {
    throw Error(ErrorCode::EmptyMatrix, "no feature columns");
  }
  if (y.size() != n) {
    throw Error(ErrorCode::ShapeMismatch,
                "y has " + std::to_string(y.size()) + " entries for " +
                    std::to_string(n) + " rows");
  }
  if (params.c <= 0.0 || params.epsilon < 0.0) {
    throw Error(ErrorCode::InvalidConfig, "require C > 0 and epsilon >= 0");
  }
  if (!x.all_finite() ||
      !std::all_of(y.begin(), y.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::NonFiniteInput, "X or y contains NaN/Inf");
  }

  const double c = params.c;
  const double eps = params.epsilon;
  const double gamma = params.gamma > 0.0 ? params.gamma : default_gamma(x);

  linalg::Matrix kernel(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double k = rbf_kernel(x.row_ptr(i), x.row_ptr(j), p, gamma);
      kernel(i, j) = k;
      kernel(j, i) = k;
    }
  }

  std::vector<double> beta(n, 0.0);
  std::vector<double> grad(y);  // G_i = y_i - (K beta)_i; beta = 0 initially

  auto record_objective = [&] {
    if (!info) return;
    // W = beta.y - eps*||beta||_1 - beta.(K beta)/2, with K beta = y - G.
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w += beta[i] * y[i] - eps * std::abs(beta[i]) -
           0.5 * beta[i] * (y[i] - grad[i]);
    }
    info->objective_trace.push_back(w);
  };

  bool converged = false;
  double violation = 0.0;
  std::size_t pass = 0;
  for (; pass < params.max_passes; ++pass) {
    std::size_t best_up = n, best_down = n;
    double up_max = -std::numeric_limits<double>::infinity();
    double down_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i] < c) {
        double v = up_value(grad[i], beta[i], eps);
        if (v > up_max) {
          up_max = v;
          best_up = i;
        }
      }
      if (beta[i] > -c) {
        double v = down_value(grad[i], beta[i], eps);
        if (v < down_min) {
          down_min = v;
          best_down = i;
        }
      }
    }
    violation = up_max - down_min;
    if (violation <= params.kkt_tol || best_up == n || best_down == n ||
        best_up == best_down) {
      converged = violation <= params.kkt_tol;
      break;
    }

    std::size_t i = best_up, j = best_down;
    double eta = kernel(i, i) + kernel(j, j) - 2.0 * kernel(i, j);
    if (eta < 0.0) eta = 0.0;  // PSD kernel; guard rounding
    double t_max = std::min(c - beta[i], beta[j] + c);
    PairGain gain =
        line_search(grad[i], grad[j], eta, beta[i], beta[j], eps, t_max);
    if (!(gain.t > 0.0) || !(gain.delta > 0.0)) {
      converged = false;  // stalled below the tolerance target
      break;
    }

    beta[i] += gain.t;
    beta[j] -= gain.t;
    beta[i] = std::clamp(beta[i], -c, c);
    beta[j] = std::clamp(beta[j], -c, c);
    for (std::size_t k = 0; k < n; ++k) {
      grad[k] -= gain.t * (kernel(k, i) - kernel(k, j));
    }
    record_objective();
  }
  if (info) {
    info->passes = pass;
    info->final_violation = violation;
  }

  // Bias from free support vectors (margin conditions); midpoint of the
  // KKT interval when none are free.
  double bias_sum = 0.0;
  std::size_t bias_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i] > 0.0 && beta[i] < c) {
      bias_sum += grad[i] - eps;
      ++bias_count;
    } else if (beta[i] < 0.0 && beta[i] > -c) {
      bias_sum += grad[i] + eps;
      ++bias_count;
    }
  }
  double bias;
  if (bias_count > 0) {
    bias = bias_sum / static_cast<double>(bias_count);
  } else {
    double up_max = -std::numeric_limits<double>::infinity();
    double down_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i] < c) up_max = std::max(up_max, up_value(grad[i], beta[i], eps));
      if (beta[i] > -c)
        down_min = std::min(down_min, down_value(grad[i], beta[i], eps));
    }
    bias = 0.5 * (up_max + down_min);
  }

  SvrModel model;
  model.c = c;
  model.epsilon = eps;
  model.gamma = gamma;
  model.bias = bias;
  model.n_features = p;
  model.converged = converged;

  std::size_t n_sv = 0;
  for (double b : beta) {
    if (b != 0.0) ++n_sv;
  }
  model.support_vectors = linalg::Matrix(n_sv, p);
  model.dual_coefficients.reserve(n_sv);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i] == 0.0) continue;
    std::copy(x.row_ptr(i), x.row_ptr(i) + p,
              model.support_vectors.row_ptr(row));
    model.dual_coefficients.push_back(beta[i]);
    ++row;
  }
  return model;
}

std::vector<double> predict_svr(const SvrModel& model,
                                const linalg::Matrix& x) {
  if (x.cols() != model.n_features) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(x.cols()) + " features, model expects " +
                    std::to_string(model.n_features));
  }
  std::vector<double> out(x.rows(), model.bias);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const double* row = x.row_ptr(r);
    double acc = model.bias;
    for (std::size_t s = 0; s < model.support_vectors.rows(); ++s) {
      acc += model.dual_coefficients[s] *
             rbf_kernel(model.support_vectors.row_ptr(s), row,
                        model.n_features, model.gamma);
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace cricket::models
