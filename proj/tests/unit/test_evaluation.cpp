#include <doctest.h>

#include <cmath>

#include "cricket/error.hpp"
#include "cricket/evaluation.hpp"
#include "cricket/rng.hpp"

using namespace cricket;
using namespace cricket::eval;

TEST_CASE("r2_score matches the definitional cases") {
  CHECK(r2_score({1, 2, 3}, {1, 2, 3}) == 1.0);
  CHECK(r2_score({1, 2, 3}, {2, 2, 2}) == 0.0);
  CHECK(r2_score({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-3.0).epsilon(1e-12));

  try {
    r2_score({1, 2}, {1, 2, 3});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
  try {
    r2_score({5, 5, 5}, {1, 2, 3});
    FAIL("expected ConstantActual");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstantActual);
  }
}

TEST_CASE("r2_score is invariant under common affine transforms") {
  SplitMix64 rng(131);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 3 + rng.bounded(30);
    std::vector<double> actual(n), predicted(n);
    for (std::size_t i = 0; i < n; ++i) {
      actual[i] = rng.uniform01() * 100.0;
      predicted[i] = actual[i] + (rng.uniform01() - 0.5) * 20.0;
    }
    actual[0] += 1.0;  // guard against a constant draw
    double base = r2_score(actual, predicted);

    double a = 0.1 + rng.uniform01() * 5.0;
    if (rng.bounded(2)) a = -a;
    double b = (rng.uniform01() - 0.5) * 50.0;
    std::vector<double> actual2(n), predicted2(n);
    for (std::size_t i = 0; i < n; ++i) {
      actual2[i] = a * actual[i] + b;
      predicted2[i] = a * predicted[i] + b;
    }
    CHECK(r2_score(actual2, predicted2) == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("pearson_matrix computes the textbook cases") {
  FeatureTable t;
  t.columns = {{"x", ColumnKind::Numeric},
               {"neg", ColumnKind::Numeric},
               {"const", ColumnKind::Numeric}};
  for (int i = 1; i <= 3; ++i) {
    t.rows.push_back({Cell::num(i), Cell::num(-i), Cell::num(7.0)});
  }
  auto m = pearson_matrix(t);
  REQUIRE(m.labels.size() == 3);
  CHECK(m.values[0][0] == 1.0);
  CHECK(m.values[1][1] == 1.0);
  CHECK(m.values[0][1] == doctest::Approx(-1.0).epsilon(1e-12));

  // Constant column pairs are zero and flagged, including the diagonal.
  CHECK(m.values[0][2] == 0.0);
  CHECK(m.values[2][2] == 0.0);
  CHECK(m.degenerate[0][2]);
  CHECK(m.degenerate[2][2]);
  CHECK_FALSE(m.degenerate[0][1]);

  FeatureTable one_row;
  one_row.columns = {{"x", ColumnKind::Numeric}};
  one_row.rows.push_back({Cell::num(1)});
  try {
    pearson_matrix(one_row);
    FAIL("expected TooFewRows");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewRows);
  }
}

TEST_CASE("pearson_matrix is symmetric with unit diagonal") {
  SplitMix64 rng(137);
  FeatureTable t;
  for (int c = 0; c < 5; ++c) {
    t.columns.push_back({"c" + std::to_string(c), ColumnKind::Numeric});
  }
  for (int r = 0; r < 30; ++r) {
    std::vector<Cell> row;
    for (int c = 0; c < 5; ++c) {
      row.push_back(Cell::num(rng.uniform01() * 10.0));
    }
    t.rows.push_back(row);
  }
  auto m = pearson_matrix(t);
  for (std::size_t a = 0; a < 5; ++a) {
    CHECK(m.values[a][a] == 1.0);
    for (std::size_t b = 0; b < 5; ++b) {
      CHECK(std::abs(m.values[a][b] - m.values[b][a]) < 1e-12);
      CHECK(m.values[a][b] <= 1.0);
      CHECK(m.values[a][b] >= -1.0);
    }
  }
}

TEST_CASE("comparison_series pairs rows and can invert label scaling") {
  auto series = comparison_series({1, 2, 3}, {1.5, 2.5, 3.5});
  REQUIRE(series.size() == 3);
  CHECK(series[0].index == 0);
  CHECK(series[2].actual == 3.0);
  CHECK(series[2].predicted == 3.5);

  preprocess::ColumnScale scale;
  scale.column = "impact";
  scale.mean = 100.0;
  scale.stddev = 10.0;
  auto scaled = comparison_series({0.0, 1.0}, {-1.0, 2.0}, &scale);
  CHECK(scaled[0].actual == 100.0);
  CHECK(scaled[0].predicted == 90.0);
  CHECK(scaled[1].actual == 110.0);
  CHECK(scaled[1].predicted == 120.0);

  try {
    comparison_series({1}, {1, 2});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("accuracy_report aggregates and sorts by descending mean") {
  std::vector<ResultCell> cells = {
      {"BatterA", "multiple_linear", 89.14},
      {"BatterB", "multiple_linear", 91.53},
      {"BatterC", "multiple_linear", 89.80},
      {"BatterA", "random_forest", 85.06},
      {"BatterB", "random_forest", 91.70},
      {"BatterC", "random_forest", 84.60},
  };
  auto report = accuracy_report(cells);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].model == "multiple_linear");
  CHECK(format_two_decimals(report.rows[0].mean_r2) == "90.16");
  CHECK(format_two_decimals(report.rows[1].mean_r2) == "87.12");

  // Mean equals the arithmetic mean of the cells exactly.
  CHECK(report.rows[0].mean_r2 ==
        doctest::Approx((89.14 + 91.53 + 89.80) / 3.0).epsilon(1e-12));

  auto single = accuracy_report({{"P", "svr", 0.5}});
  CHECK(single.rows.size() == 1);
  CHECK(single.rows[0].mean_r2 == 0.5);

  try {
    accuracy_report({});
    FAIL("expected EmptyResults");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyResults);
  }
}

TEST_CASE("report mean stays exact for random cells") {
  SplitMix64 rng(139);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ResultCell> cells;
    std::size_t players = 1 + rng.bounded(5);
    double sum = 0.0;
    for (std::size_t p = 0; p < players; ++p) {
      double value = rng.uniform01();
      sum += value;
      cells.push_back({"P" + std::to_string(p), "m", value});
    }
    auto report = accuracy_report(cells);
    CHECK(std::abs(report.rows[0].mean_r2 -
                   sum / static_cast<double>(players)) < 1e-12);
  }
}
