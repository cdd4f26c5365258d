#include "cricket/polynomial.hpp"

#include "cricket/error.hpp"

namespace cricket::models {

namespace {

void enumerate_degree(std::size_t n_features, int total, std::size_t pos,
                      std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (pos + 1 == n_features) {
    current[pos] = total;
    out.push_back(current);
    return;
  }
  for (int e = total; e >= 0; --e) {
    current[pos] = e;
    enumerate_degree(n_features, total - e, pos + 1, current, out);
  }
}

}  // namespace

std::vector<std::vector<int>> monomial_exponents(std::size_t n_features,
                                                 int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(n_features, 0);
  for (int total = 0; total <= degree; ++total) {
    enumerate_degree(n_features, total, 0, current, out);
  }
  return out;
}

std::uint64_t expansion_term_count(std::size_t n_features, int degree) {
  // C(p + d, d) with early overflow clamp.
  std::uint64_t count = 1;
  for (int i = 1; i <= degree; ++i) {
    unsigned __int128 next =
        static_cast<unsigned __int128>(count) * (n_features + i);
    next /= i;
    if (next > UINT64_MAX) return UINT64_MAX;
    count = static_cast<std::uint64_t>(next);
  }
  return count;
}

linalg::Matrix expand_polynomial(const linalg::Matrix& x, int degree,
                                 std::uint64_t max_terms) {
  if (degree < 1) {
    throw Error(ErrorCode::InvalidConfig, "degree must be >= 1");
  }
  std::uint64_t terms = expansion_term_count(x.cols(), degree);
  if (terms > max_terms) {
    throw Error(ErrorCode::ExpansionTooLarge,
                std::to_string(terms) + " terms exceeds cap of " +
                    std::to_string(max_terms));
  }
  auto exponents = monomial_exponents(x.cols(), degree);

  linalg::Matrix out(x.rows(), exponents.size());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const double* row = x.row_ptr(r);
    double* dst = out.row_ptr(r);
    for (std::size_t t = 0; t < exponents.size(); ++t) {
      double value = 1.0;
      for (std::size_t f = 0; f < x.cols(); ++f) {
        for (int e = 0; e < exponents[t][f]; ++e) value *= row[f];
      }
      dst[t] = value;
    }
  }
  return out;
}

PolyModel fit_poly(const linalg::Matrix& x, const std::vector<double>& y,
                   int degree, std::uint64_t max_terms) {
  PolyModel model;
  model.degree = degree;
  model.n_features = x.cols();
  linalg::Matrix expanded = expand_polynomial(x, degree, max_terms);
  model.term_exponents = monomial_exponents(x.cols(), degree);
  model.core = fit_linear(expanded, y);
  return model;
}

std::vector<double> predict_poly(const PolyModel& model,
                                 const linalg::Matrix& x) {
  if (x.cols() != model.n_features) {
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(x.cols()) + " features, model expects " +
                    std::to_string(model.n_features));
  }
  linalg::Matrix expanded = expand_polynomial(
      x, model.degree, static_cast<std::uint64_t>(-1));
  return predict_linear(model.core, expanded);
}

}  // namespace cricket::models
