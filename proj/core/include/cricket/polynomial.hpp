#pragma once

#include <cstdint>
#include <vector>

#include "cricket/linear_model.hpp"

namespace cricket::models {

/// Exponent multi-indices of every monomial with total degree <= degree
/// over n_features variables, in graded order (degree ascending, then the
/// exponent tuple descending lexicographically): 1, x1, x2, x1^2, x1*x2,
/// x2^2, ... The constant term is included.
std::vector<std::vector<int>> monomial_exponents(std::size_t n_features,
                                                 int degree);

/// C(n_features + degree, degree); the expanded column count.
std::uint64_t expansion_term_count(std::size_t n_features, int degree);

/// Maps X to the monomial basis. Throws Error{ExpansionTooLarge} when the
/// term count exceeds max_terms (checked before any allocation).
linalg::Matrix expand_polynomial(const linalg::Matrix& x, int degree,
                                 std::uint64_t max_terms = 100000);

struct PolyModel {
  int degree = 4;
  std::size_t n_features = 0;
  std::vector<std::vector<int>> term_exponents;
  LinearModel core;  // fitted over the expanded basis
};

/// fit_linear over the expanded basis; p > n is handled by the
/// minimum-norm path of the linear solver.
PolyModel fit_poly(const linalg::Matrix& x, const std::vector<double>& y,
                   int degree = 4, std::uint64_t max_terms = 100000);

std::vector<double> predict_poly(const PolyModel& model,
                                 const linalg::Matrix& x);

}  // namespace cricket::models
