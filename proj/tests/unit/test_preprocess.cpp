#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>

#include "cricket/error.hpp"
#include "cricket/preprocess.hpp"
#include "cricket/rng.hpp"

using namespace cricket;
using namespace cricket::preprocess;

namespace {

FeatureTable tiny_numeric_table(const std::vector<std::vector<double>>& cols) {
  FeatureTable t;
  std::size_t n_rows = cols.front().size();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    t.columns.push_back({"c" + std::to_string(c), ColumnKind::Numeric});
  }
  t.columns.back().kind = ColumnKind::Label;
  for (std::size_t r = 0; r < n_rows; ++r) {
    std::vector<Cell> row;
    for (const auto& col : cols) row.push_back(Cell::num(col[r]));
    t.rows.push_back(row);
    t.row_ids.push_back("r" + std::to_string(r));
  }
  return t;
}

// A full derived-style table with every model feature plus the label.
FeatureTable derived_style_table(std::size_t n, SplitMix64& rng) {
  FeatureTable t;
  t.columns = {
      {"out_not_out", ColumnKind::Categorical},
      {"opposition_index", ColumnKind::Numeric},
      {"home_away", ColumnKind::Categorical},
      {"dot_ball", ColumnKind::Numeric},
      {"others", ColumnKind::Numeric},
      {"win_loss", ColumnKind::Categorical},
      {"team_run", ColumnKind::Numeric},
      {"in_at_position", ColumnKind::Numeric},
      {"pitch_index", ColumnKind::Numeric},
      {"weather", ColumnKind::Categorical},
      {"diagnostic_extra", ColumnKind::Numeric},
      {"impact", ColumnKind::Label},
  };
  const char* out_vals[] = {"Out", "NotOut"};
  const char* ha_vals[] = {"Away", "Home", "Neutral"};
  const char* wl_vals[] = {"Draw", "Loss", "NoResult", "Win"};
  const char* wx_vals[] = {"Clear", "Overcast", "Sunny", "Windy"};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Cell> row;
    row.push_back(Cell::txt(out_vals[rng.bounded(2)]));
    row.push_back(Cell::num(1.0 + static_cast<double>(rng.bounded(5))));
    row.push_back(Cell::txt(ha_vals[rng.bounded(3)]));
    row.push_back(Cell::num(static_cast<double>(rng.bounded(80))));
    row.push_back(Cell::num(static_cast<double>(rng.bounded(50))));
    row.push_back(Cell::txt(wl_vals[rng.bounded(4)]));
    row.push_back(Cell::num(150.0 + static_cast<double>(rng.bounded(200))));
    row.push_back(Cell::num(1.0 + static_cast<double>(rng.bounded(8))));
    row.push_back(Cell::num(1.0 + 0.5 * static_cast<double>(rng.bounded(3))));
    row.push_back(Cell::txt(wx_vals[rng.bounded(4)]));
    row.push_back(Cell::num(rng.uniform01()));
    row.push_back(Cell::num(20.0 + 200.0 * rng.uniform01()));
    t.rows.push_back(row);
    t.row_ids.push_back("m" + std::to_string(r));
  }
  return t;
}

}  // namespace

TEST_CASE("drop_incomplete removes exactly the rows with missing cells") {
  FeatureTable t = tiny_numeric_table({{1, 2, 3}, {4, 5, 6}});
  t.rows[1][0] = Cell::missing();
  auto result = drop_incomplete(t);
  CHECK(result.dropped == 1);
  CHECK(result.table.rows.size() == 2);
  CHECK(result.table.row_ids == std::vector<std::string>{"r0", "r2"});

  // Identity on complete tables.
  FeatureTable clean = tiny_numeric_table({{1, 2}, {3, 4}});
  auto same = drop_incomplete(clean);
  CHECK(same.dropped == 0);
  CHECK(same.table.rows.size() == 2);

  // Everything missing.
  FeatureTable all = tiny_numeric_table({{1}, {2}});
  all.rows[0][1] = Cell::missing();
  try {
    drop_incomplete(all);
    FAIL("expected AllRowsDropped");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllRowsDropped);
  }
}

TEST_CASE("select_features keeps the configured columns plus the label") {
  SplitMix64 rng(21);
  auto t = derived_style_table(5, rng);
  auto selected = select_features(t);
  CHECK(selected.columns.size() == 11);  // 10 features + impact
  CHECK(selected.columns.back().name == "impact");
  CHECK(selected.columns.back().kind == ColumnKind::Label);
  CHECK_FALSE(selected.has_column("diagnostic_extra"));

  // A missing configured feature is an error naming the column.
  FeatureTable missing = t;
  missing.columns[9].name = "renamed";
  try {
    select_features(missing);
    FAIL("expected MissingColumn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingColumn);
    CHECK(std::string(e.what()).find("weather") != std::string::npos);
  }
}

TEST_CASE("encode maps categories to numeric and one-hot columns") {
  SplitMix64 rng(23);
  auto t = select_features(derived_style_table(6, rng));
  auto encoded = encode(t);

  // out_not_out stays one column; the three categoricals expand.
  CHECK(encoded.columns.size() == 11 - 3 + 3 + 4 + 4);
  for (const auto& col : encoded.columns) {
    CHECK(col.kind != ColumnKind::Categorical);
  }

  // Fixed alphabetical group order.
  std::vector<std::string> names;
  for (const auto& col : encoded.columns) names.push_back(col.name);
  auto pos = [&names](const std::string& n) {
    return std::find(names.begin(), names.end(), n) - names.begin();
  };
  CHECK(pos("Away") + 1 == pos("Home"));
  CHECK(pos("Home") + 1 == pos("Neutral"));
  CHECK(pos("Draw") + 1 == pos("Loss"));
  CHECK(pos("Loss") + 1 == pos("NoResult"));
  CHECK(pos("NoResult") + 1 == pos("Win"));
  CHECK(pos("Clear") + 1 == pos("Overcast"));
  CHECK(pos("Overcast") + 1 == pos("Sunny"));
  CHECK(pos("Sunny") + 1 == pos("Windy"));

  // Weather Clear encodes as (1,0,0,0) across (Clear,Overcast,Sunny,Windy).
  FeatureTable one = t;
  one.rows.resize(1);
  one.rows[0][t.column_index("weather")] = Cell::txt("Clear");
  one.rows[0][t.column_index("out_not_out")] = Cell::txt("NotOut");
  one.row_ids.resize(1);
  auto e1 = encode(one);
  CHECK(e1.rows[0][e1.column_index("Clear")].number == 1.0);
  CHECK(e1.rows[0][e1.column_index("Overcast")].number == 0.0);
  CHECK(e1.rows[0][e1.column_index("Sunny")].number == 0.0);
  CHECK(e1.rows[0][e1.column_index("Windy")].number == 0.0);
  CHECK(e1.rows[0][e1.column_index("out_not_out")].number == 1.0);

  // Unknown category.
  FeatureTable bad = t;
  bad.rows[0][t.column_index("weather")] = Cell::txt("Foggy");
  try {
    encode(bad);
    FAIL("expected UnknownCategory");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCategory);
  }
}

TEST_CASE("encode is injective on category values within a column") {
  const char* ha_vals[] = {"Away", "Home", "Neutral"};
  std::set<std::vector<double>> encodings;
  for (const char* v : ha_vals) {
    FeatureTable t;
    t.columns = {{"home_away", ColumnKind::Categorical},
                 {"impact", ColumnKind::Label}};
    t.rows.push_back({Cell::txt(v), Cell::num(1.0)});
    auto e = encode(t);
    std::vector<double> enc;
    for (std::size_t c = 0; c + 1 < e.columns.size(); ++c) {
      enc.push_back(e.rows[0][c].number);
    }
    encodings.insert(enc);
  }
  CHECK(encodings.size() == 3);
}

TEST_CASE("fit_scaler computes population z-score parameters") {
  FeatureTable t = tiny_numeric_table({{1, 2, 3}, {7, 7, 7}});
  auto params = fit_scaler(t, true);
  const auto* c0 = params.find("c0");
  REQUIRE(c0 != nullptr);
  CHECK(c0->mean == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c0->stddev == doctest::Approx(0.816497).epsilon(1e-6));
  CHECK_FALSE(c0->constant);

  auto scaled = apply_scaler(t, params);
  CHECK(scaled.rows[0][0].number == doctest::Approx(-1.224745).epsilon(1e-6));
  CHECK(scaled.rows[1][0].number == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(scaled.rows[2][0].number == doctest::Approx(1.224745).epsilon(1e-6));

  // Constant column passes through with the flag set.
  const auto* c1 = params.find("c1");
  REQUIRE(c1 != nullptr);
  CHECK(c1->constant);
  CHECK(scaled.rows[0][1].number == 7.0);

  // Empty matrix.
  FeatureTable empty;
  empty.columns = {{"x", ColumnKind::Numeric}};
  try {
    fit_scaler(empty, false);
    FAIL("expected EmptyMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyMatrix);
  }
}

TEST_CASE("scaling an already standardized column is near identity") {
  FeatureTable t = tiny_numeric_table(
      {{-1.224744871391589, 0.0, 1.224744871391589}, {1, 2, 3}});
  auto params = fit_scaler(t, true);
  const auto* c0 = params.find("c0");
  CHECK(std::abs(c0->mean) < 1e-9);
  CHECK(std::abs(c0->stddev - 1.0) < 1e-9);
}

TEST_CASE("scaler inverse recovers original values") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> col;
    std::size_t n = 3 + rng.bounded(20);
    for (std::size_t i = 0; i < n; ++i) {
      col.push_back(rng.uniform01() * 500.0 - 100.0);
    }
    FeatureTable t = tiny_numeric_table({col, col});
    auto params = fit_scaler(t, true);
    auto scaled = apply_scaler(t, params);
    std::vector<double> scaled_col;
    for (const auto& row : scaled.rows) scaled_col.push_back(row[0].number);
    auto back = inverse_scale(scaled_col, *params.find("c0"));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(back[i] - col[i]) < 1e-9);
    }
  }
}

TEST_CASE("scaler sidecar round-trips through CSV") {
  FeatureTable t = tiny_numeric_table({{1.5, 2.25, 9.75}, {3, 4, 5}});
  auto params = fit_scaler(t, true);

  auto tmp = std::filesystem::temp_directory_path() /
             "cricket_scaler_roundtrip.csv";
  save_scaler(tmp.string(), params, "# config_hash=deadbeef seed=1");
  auto loaded = load_scaler(tmp.string());
  std::filesystem::remove(tmp);

  REQUIRE(loaded.columns.size() == params.columns.size());
  for (std::size_t i = 0; i < params.columns.size(); ++i) {
    CHECK(loaded.columns[i].column == params.columns[i].column);
    CHECK(loaded.columns[i].mean == params.columns[i].mean);
    CHECK(loaded.columns[i].stddev == params.columns[i].stddev);
  }
}

TEST_CASE("train_test_split partitions deterministically") {
  SplitSpec spec{42, 0.25};
  auto split = train_test_split(200, spec);
  CHECK(split.test_indices.size() == 50);
  CHECK(split.train_indices.size() == 150);

  // Same seed, same partition; different seed, (almost surely) different.
  auto again = train_test_split(200, spec);
  CHECK(split.test_indices == again.test_indices);
  CHECK(split.train_indices == again.train_indices);
  auto other = train_test_split(200, SplitSpec{43, 0.25});
  CHECK(split.test_indices != other.test_indices);

  try {
    train_test_split(3, spec);
    FAIL("expected TooFewRows");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewRows);
  }
  CHECK_THROWS_AS(train_test_split(10, SplitSpec{1, 0.0}), Error);
  CHECK_THROWS_AS(train_test_split(10, SplitSpec{1, 1.0}), Error);
}

TEST_CASE("split partitions are disjoint and cover the rows") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 4 + rng.bounded(300);
    double fraction = 0.05 + 0.9 * rng.uniform01();
    auto split = train_test_split(n, SplitSpec{rng.next(), fraction});

    std::set<std::size_t> seen;
    for (auto i : split.test_indices) seen.insert(i);
    for (auto i : split.train_indices) seen.insert(i);
    CHECK(seen.size() == n);
    CHECK(split.test_indices.size() + split.train_indices.size() == n);
    CHECK(*seen.rbegin() == n - 1);
    CHECK(split.test_indices.size() ==
          static_cast<std::size_t>(
              std::ceil(fraction * static_cast<double>(n))));
  }
}

TEST_CASE("full preprocessing chain: encode, scale, verify properties") {
  SplitMix64 rng(41);
  auto table = derived_style_table(40, rng);
  auto selected = select_features(table);
  auto encoded = encode(selected);

  // One-hot groups sum to exactly 1 per row before scaling.
  const std::vector<std::vector<std::string>> groups = {
      {"Away", "Home", "Neutral"},
      {"Draw", "Loss", "NoResult", "Win"},
      {"Clear", "Overcast", "Sunny", "Windy"}};
  for (const auto& row : encoded.rows) {
    for (const auto& group : groups) {
      double sum = 0.0;
      for (const auto& name : group) {
        sum += row[encoded.column_index(name)].number;
      }
      CHECK(sum == 1.0);
    }
  }

  auto params = fit_scaler(encoded, true);
  auto scaled = apply_scaler(encoded, params);
  const double n = static_cast<double>(scaled.rows.size());
  for (std::size_t c = 0; c < scaled.columns.size(); ++c) {
    const auto* scale = params.find(scaled.columns[c].name);
    REQUIRE(scale != nullptr);
    if (scale->constant) continue;
    double mean = 0.0;
    for (const auto& row : scaled.rows) mean += row[c].number;
    mean /= n;
    double var = 0.0;
    for (const auto& row : scaled.rows) {
      double d = row[c].number - mean;
      var += d * d;
    }
    CHECK(std::abs(mean) < 1e-9);
    CHECK(std::abs(std::sqrt(var / n) - 1.0) < 1e-9);
  }
}

TEST_CASE("to_matrix extracts features and label") {
  FeatureTable t = tiny_numeric_table({{1, 2}, {3, 4}, {10, 20}});
  auto m = to_matrix(t);
  CHECK(m.feature_names == std::vector<std::string>{"c0", "c1"});
  CHECK(m.x == std::vector<std::vector<double>>{{1, 3}, {2, 4}});
  CHECK(m.y == std::vector<double>{10, 20});
}
