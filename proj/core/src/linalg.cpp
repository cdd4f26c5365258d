#include "cricket/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cricket/error.hpp"

namespace cricket::linalg {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(m.cols()));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row_ptr(r));
  }
  return m;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

SymmetricEigen jacobi_eigen(Matrix a, std::size_t max_sweeps) {
  const std::size_t n = a.rows();
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(a(p, q));
    }
    if (off == 0.0) break;
    // Rotation threshold for the first sweeps, then rotate on anything
    // that is not negligible against both diagonal entries.
    double tresh = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= tresh) continue;

        double h = a(q, q) - a(p, p);
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        double tau = s / (1.0 + c);
        double delta = t * apq;

        a(p, p) -= delta;
        a(q, q) += delta;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = a(k, p);
          double akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(k, q) = akq + s * (akp - tau * akq);
          a(p, k) = a(k, p);
          a(q, k) = a(k, q);
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v(k, p);
          double vkq = v(k, q);
          v(k, p) = vkp - s * (vkq + tau * vkp);
          v(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }

  SymmetricEigen eigen;
  eigen.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) eigen.values[i] = a(i, i);

  // Sort eigenpairs by descending eigenvalue.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&eigen](auto i, auto j) {
    return eigen.values[i] > eigen.values[j];
  });
  SymmetricEigen sorted;
  sorted.values.resize(n);
  sorted.vectors = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted.values[i] = eigen.values[order[i]];
    for (std::size_t k = 0; k < n; ++k) {
      sorted.vectors(k, i) = v(k, order[i]);
    }
  }
  return sorted;
}

std::vector<double> min_norm_lstsq(const Matrix& x,
                                   const std::vector<double>& y) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (n == 0 || p == 0) {
    throw Error(ErrorCode::EmptyMatrix, "least squares on an empty matrix");
  }
  if (y.size() != n) {
    throw Error(ErrorCode::ShapeMismatch,
                "y has " + std::to_string(y.size()) + " entries, X has " +
                    std::to_string(n) + " rows");
  }

  const double eps = std::numeric_limits<double>::epsilon();
  const double dim = static_cast<double>(std::max(n, p));

  if (p <= n) {
    // Gram on the feature side: G = X^T X, z = X^T y.
    Matrix g(p, p);
    std::vector<double> z(p, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      const double* row = x.row_ptr(r);
      for (std::size_t a = 0; a < p; ++a) {
        double xa = row[a];
        if (xa == 0.0) continue;
        double* grow = g.row_ptr(a);
        for (std::size_t b = a; b < p; ++b) grow[b] += xa * row[b];
      }
      for (std::size_t a = 0; a < p; ++a) z[a] += row[a] * y[r];
    }
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < a; ++b) g(a, b) = g(b, a);
    }

    auto eigen = jacobi_eigen(std::move(g));
    double sigma_max = eigen.values.front() > 0.0
                           ? std::sqrt(eigen.values.front())
                           : 0.0;
    double cut = eps * dim * sigma_max;
    double cut2 = cut * cut;

    std::vector<double> beta(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
      if (!(eigen.values[i] > cut2) || eigen.values[i] <= 0.0) continue;
      double dot = 0.0;
      for (std::size_t k = 0; k < p; ++k) dot += eigen.vectors(k, i) * z[k];
      dot /= eigen.values[i];
      for (std::size_t k = 0; k < p; ++k) {
        beta[k] += eigen.vectors(k, i) * dot;
      }
    }
    return beta;
  }

  // Fat case: G = X X^T on the sample side, beta = X^T w.
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* ri = x.row_ptr(i);
    for (std::size_t j = i; j < n; ++j) {
      const double* rj = x.row_ptr(j);
      double dot = 0.0;
      for (std::size_t k = 0; k < p; ++k) dot += ri[k] * rj[k];
      g(i, j) = dot;
      g(j, i) = dot;
    }
  }

  auto eigen = jacobi_eigen(std::move(g));
  double sigma_max =
      eigen.values.front() > 0.0 ? std::sqrt(eigen.values.front()) : 0.0;
  double cut = eps * dim * sigma_max;
  double cut2 = cut * cut;

  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(eigen.values[i] > cut2) || eigen.values[i] <= 0.0) continue;
    double dot = 0.0;
    for (std::size_t k = 0; k < n; ++k) dot += eigen.vectors(k, i) * y[k];
    dot /= eigen.values[i];
    for (std::size_t k = 0; k < n; ++k) w[k] += eigen.vectors(k, i) * dot;
  }
  std::vector<double> beta(p, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double wi = w[i];
    if (wi == 0.0) continue;
    const double* ri = x.row_ptr(i);
    for (std::size_t k = 0; k < p; ++k) beta[k] += wi * ri[k];
  }
  return beta;
}

}  // namespace cricket::linalg
