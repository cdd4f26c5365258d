#pragma once

#include <cstddef>
#include <vector>

namespace cricket::linalg {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Eigendecomposition of a symmetric matrix by the cyclic Jacobi method:
/// a = v * diag(values) * v^T, eigenvalues sorted descending.
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;  // column i is the eigenvector for values[i]
};
SymmetricEigen jacobi_eigen(Matrix a, std::size_t max_sweeps = 64);

/// Minimum-norm least-squares solution of X b = y through the singular
/// value decomposition of X, computed via the eigendecomposition of the
/// smaller Gram matrix. Singular values below
/// eps * max(n, p) * sigma_max are treated as zero, which both detects
/// rank deficiency and selects the minimum-norm solution.
std::vector<double> min_norm_lstsq(const Matrix& x,
                                   const std::vector<double>& y);

}  // namespace cricket::linalg
