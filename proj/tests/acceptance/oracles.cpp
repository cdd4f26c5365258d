#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oracles {

using cricket::linalg::Matrix;

NormalEquationsFit normal_equations(const Matrix& x,
                                    const std::vector<double>& y) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols() + 1;  // + intercept column

  // A = [X 1]^T [X 1], b = [X 1]^T y
  std::vector<std::vector<double>> a(p, std::vector<double>(p, 0.0));
  std::vector<double> rhs(p, 0.0);
  auto cell = [&x](std::size_t r, std::size_t c) {
    return c < x.cols() ? x(r, c) : 1.0;
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        a[i][j] += cell(r, i) * cell(r, j);
      }
      rhs[i] += cell(r, i) * y[r];
    }
  }

  // Gaussian elimination with partial pivoting.
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < p; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) {
      throw std::runtime_error("normal equations oracle: singular system");
    }
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = col + 1; r < p; ++r) {
      double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < p; ++c) a[r][c] -= factor * a[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<double> solution(p, 0.0);
  for (std::size_t r = p; r-- > 0;) {
    double acc = rhs[r];
    for (std::size_t c = r + 1; c < p; ++c) acc -= a[r][c] * solution[c];
    solution[r] = acc / a[r][r];
  }

  NormalEquationsFit fit;
  fit.coefficients.assign(solution.begin(), solution.end() - 1);
  fit.intercept = solution.back();
  return fit;
}

EnumeratedSplit enumerate_best_split_1d(const std::vector<double>& x,
                                        const std::vector<double>& y) {
  std::vector<double> sorted(x);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  EnumeratedSplit best;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    double threshold = sorted[i - 1] + (sorted[i] - sorted[i - 1]) / 2.0;
    std::vector<double> left, right;
    for (std::size_t r = 0; r < x.size(); ++r) {
      (x[r] <= threshold ? left : right).push_back(y[r]);
    }
    auto sse = [](const std::vector<double>& values) {
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      double acc = 0.0;
      for (double v : values) acc += (v - mean) * (v - mean);
      return acc;
    };
    double total = sse(left) + sse(right);
    if (!best.found || total < best.weighted_sse) {
      best.found = true;
      best.threshold = threshold;
      best.weighted_sse = total;
    }
  }
  return best;
}

namespace {

double rbf(const double* u, const double* v, std::size_t dim, double gamma) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    double d = u[k] - v[k];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

double dual_objective(const double k[3][3], const std::vector<double>& y,
                      double eps, const double beta[3]) {
  double quad = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      quad += beta[i] * k[i][j] * beta[j];
    }
  }
  double linear = 0.0;
  double l1 = 0.0;
  for (int i = 0; i < 3; ++i) {
    linear += beta[i] * y[i];
    l1 += std::abs(beta[i]);
  }
  return -0.5 * quad + linear - eps * l1;
}

}  // namespace

DualSolution brute_force_svr_dual(const Matrix& x, const std::vector<double>& y,
                                  double c, double epsilon, double gamma) {
  if (x.rows() != 3) {
    throw std::runtime_error("brute-force dual oracle expects 3 points");
  }
  double k[3][3];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      k[i][j] = rbf(x.row_ptr(i), x.row_ptr(j), x.cols(), gamma);
    }
  }

  double center1 = 0.0, center2 = 0.0;
  double span = c;
  double best1 = 0.0, best2 = 0.0;
  double best_value = -std::numeric_limits<double>::infinity();

  // Three refinement stages over a 161x161 grid.
  for (int stage = 0; stage < 4; ++stage) {
    const int steps = 160;
    double lo1 = std::max(-c, center1 - span);
    double hi1 = std::min(c, center1 + span);
    double lo2 = std::max(-c, center2 - span);
    double hi2 = std::min(c, center2 + span);
    for (int i = 0; i <= steps; ++i) {
      double b1 = lo1 + (hi1 - lo1) * i / steps;
      for (int j = 0; j <= steps; ++j) {
        double b2 = lo2 + (hi2 - lo2) * j / steps;
        double b3 = -b1 - b2;
        if (b3 < -c || b3 > c) continue;
        double beta[3] = {b1, b2, b3};
        double value = dual_objective(k, y, epsilon, beta);
        if (value > best_value) {
          best_value = value;
          best1 = b1;
          best2 = b2;
        }
      }
    }
    center1 = best1;
    center2 = best2;
    span *= 0.05;
  }

  DualSolution solution;
  solution.beta = {best1, best2, -best1 - best2};

  // Bias from the margin conditions of free support vectors. The grid
  // lands within its resolution of the box bounds, so classify "at the
  // bound" and "at zero" with a tolerance well above that resolution.
  const double tol = 1e-4 * c;
  double g_val[3];
  for (int i = 0; i < 3; ++i) {
    double g = y[i];
    for (int j = 0; j < 3; ++j) g -= k[i][j] * solution.beta[j];
    g_val[i] = g;
  }
  double free_sum = 0.0;
  int free_count = 0;
  for (int i = 0; i < 3; ++i) {
    double b = solution.beta[i];
    if (std::abs(b) > tol && std::abs(b) < c - tol) {
      free_sum += b > 0.0 ? g_val[i] - epsilon : g_val[i] + epsilon;
      ++free_count;
    }
  }
  if (free_count > 0) {
    solution.bias = free_sum / free_count;
  } else {
    double up_max = -std::numeric_limits<double>::infinity();
    double down_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
      double b = solution.beta[i];
      if (b < c - tol) {
        up_max = std::max(up_max, b >= -tol ? g_val[i] - epsilon
                                            : g_val[i] + epsilon);
      }
      if (b > -c + tol) {
        down_min = std::min(down_min, b <= tol ? g_val[i] + epsilon
                                               : g_val[i] - epsilon);
      }
    }
    solution.bias = 0.5 * (up_max + down_min);
  }
  return solution;
}

std::vector<double> dual_predict(const Matrix& train_x,
                                 const DualSolution& dual, const Matrix& query,
                                 double gamma) {
  std::vector<double> out(query.rows(), dual.bias);
  for (std::size_t r = 0; r < query.rows(); ++r) {
    for (std::size_t i = 0; i < train_x.rows(); ++i) {
      out[r] += dual.beta[i] *
                rbf(train_x.row_ptr(i), query.row_ptr(r), train_x.cols(),
                    gamma);
    }
  }
  return out;
}

}  // namespace oracles
