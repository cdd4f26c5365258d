#include "cricket/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "cricket/csv.hpp"
#include "cricket/error.hpp"
#include "cricket/rng.hpp"

namespace cricket::preprocess {

DropResult drop_incomplete(const FeatureTable& table) {
  table.check_rectangular();
  DropResult result;
  result.table.columns = table.columns;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    bool complete = std::none_of(table.rows[r].begin(), table.rows[r].end(),
                                 [](const Cell& c) { return c.is_missing(); });
    if (complete) {
      result.table.rows.push_back(table.rows[r]);
      if (r < table.row_ids.size())
        result.table.row_ids.push_back(table.row_ids[r]);
    } else {
      ++result.dropped;
    }
  }
  if (!table.rows.empty() && result.table.rows.empty()) {
    throw Error(ErrorCode::AllRowsDropped,
                "all " + std::to_string(table.rows.size()) +
                    " rows had missing cells");
  }
  return result;
}

const std::vector<std::string>& default_feature_columns() {
  static const std::vector<std::string> columns = {
      "out_not_out", "opposition_index", "home_away", "dot_ball",
      "others",      "win_loss",         "team_run",  "in_at_position",
      "pitch_index", "weather",
  };
  return columns;
}

FeatureTable select_features(const FeatureTable& table,
                             const std::vector<std::string>& features,
                             const std::string& label) {
  table.check_rectangular();
  std::vector<std::size_t> keep;
  std::vector<Column> schema;
  for (const auto& name : features) {
    std::size_t idx = table.column_index(name);  // throws MissingColumn
    keep.push_back(idx);
    Column col = table.columns[idx];
    if (col.kind == ColumnKind::Label) col.kind = ColumnKind::Numeric;
    schema.push_back(col);
  }
  std::size_t label_idx = table.column_index(label);
  keep.push_back(label_idx);
  schema.push_back({label, ColumnKind::Label});

  FeatureTable out;
  out.columns = std::move(schema);
  out.row_ids = table.row_ids;
  out.rows.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<Cell> cells;
    cells.reserve(keep.size());
    for (std::size_t idx : keep) cells.push_back(row[idx]);
    out.rows.push_back(std::move(cells));
  }
  return out;
}

const std::vector<CategoricalSpec>& categorical_specs() {
  static const std::vector<CategoricalSpec> specs = {
      {"home_away", {"Away", "Home", "Neutral"}},
      {"win_loss", {"Draw", "Loss", "NoResult", "Win"}},
      {"weather", {"Clear", "Overcast", "Sunny", "Windy"}},
  };
  return specs;
}

namespace {

const CategoricalSpec* find_spec(const std::string& column) {
  for (const auto& spec : categorical_specs()) {
    if (spec.column == column) return &spec;
  }
  return nullptr;
}

double encode_out_not_out(const std::string& value) {
  if (value == "Out") return 0.0;
  if (value == "NotOut") return 1.0;
  throw Error(ErrorCode::UnknownCategory, "out_not_out \"" + value + "\"");
}

}  // namespace

FeatureTable encode(const FeatureTable& table) {
  table.check_rectangular();
  FeatureTable out;
  out.row_ids = table.row_ids;
  out.rows.resize(table.rows.size());

  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const Column& col = table.columns[c];
    const CategoricalSpec* spec =
        col.kind == ColumnKind::Categorical ? find_spec(col.name) : nullptr;

    if (col.kind != ColumnKind::Categorical) {
      out.columns.push_back(col);
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out.rows[r].push_back(table.rows[r][c]);
      }
      continue;
    }

    if (!spec) {
      // Binary label encoding; out_not_out is the only two-valued column.
      if (col.name != "out_not_out") {
        throw Error(ErrorCode::UnknownCategory,
                    "no encoding defined for column " + col.name);
      }
      out.columns.push_back({col.name, ColumnKind::Numeric});
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Cell& cell = table.rows[r][c];
        out.rows[r].push_back(
            cell.is_missing() ? Cell::missing()
                              : Cell::num(encode_out_not_out(cell.text)));
      }
      continue;
    }

    for (const auto& category : spec->categories) {
      out.columns.push_back({category, ColumnKind::Numeric});
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const Cell& cell = table.rows[r][c];
      if (cell.is_missing()) {
        for (std::size_t k = 0; k < spec->categories.size(); ++k) {
          out.rows[r].push_back(Cell::missing());
        }
        continue;
      }
      auto it = std::find(spec->categories.begin(), spec->categories.end(),
                          cell.text);
      if (it == spec->categories.end()) {
        throw Error(ErrorCode::UnknownCategory,
                    col.name + " \"" + cell.text + "\"");
      }
      for (const auto& category : spec->categories) {
        out.rows[r].push_back(Cell::num(category == cell.text ? 1.0 : 0.0));
      }
    }
  }
  return out;
}

const ColumnScale* ScalerParams::find(const std::string& column) const {
  for (const auto& c : columns) {
    if (c.column == column) return &c;
  }
  return nullptr;
}

ScalerParams fit_scaler(const FeatureTable& table, bool scale_label) {
  table.check_rectangular();
  if (table.rows.empty() || table.columns.empty()) {
    throw Error(ErrorCode::EmptyMatrix, "nothing to scale");
  }
  ScalerParams params;
  params.label_scaled = scale_label;
  const double n = static_cast<double>(table.rows.size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const Column& col = table.columns[c];
    if (col.kind == ColumnKind::Label && !scale_label) continue;
    if (col.kind == ColumnKind::Categorical) continue;

    double sum = 0.0;
    for (const auto& row : table.rows) {
      if (row[c].kind != Cell::Kind::Number) {
        throw Error(ErrorCode::EmptyMatrix,
                    "non-numeric cell in column " + col.name);
      }
      sum += row[c].number;
    }
    double mean = sum / n;
    double sq = 0.0;
    for (const auto& row : table.rows) {
      double d = row[c].number - mean;
      sq += d * d;
    }
    ColumnScale scale;
    scale.column = col.name;
    scale.mean = mean;
    scale.stddev = std::sqrt(sq / n);  // population std, divisor n
    scale.constant = scale.stddev == 0.0;
    params.columns.push_back(std::move(scale));
  }
  return params;
}

FeatureTable apply_scaler(const FeatureTable& table,
                          const ScalerParams& params) {
  FeatureTable out = table;
  for (std::size_t c = 0; c < out.columns.size(); ++c) {
    const ColumnScale* scale = params.find(out.columns[c].name);
    if (!scale || scale->constant) continue;
    for (auto& row : out.rows) {
      if (row[c].kind == Cell::Kind::Number) {
        row[c].number = (row[c].number - scale->mean) / scale->stddev;
      }
    }
  }
  return out;
}

std::vector<double> inverse_scale(const std::vector<double>& values,
                                  const ColumnScale& scale) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    out.push_back(scale.constant ? v : v * scale.stddev + scale.mean);
  }
  return out;
}

void save_scaler(const std::string& path, const ScalerParams& params,
                 const std::string& meta_line) {
  csv::Document doc;
  if (!meta_line.empty()) doc.meta.push_back(meta_line);
  doc.header = {"column", "mean", "stddev", "constant"};
  for (const auto& c : params.columns) {
    doc.rows.push_back({c.column, csv::format_double(c.mean),
                        csv::format_double(c.stddev),
                        c.constant ? "1" : "0"});
  }
  csv::write_file(path, doc);
}

ScalerParams load_scaler(const std::string& path) {
  csv::Document doc = csv::read_file(path);
  ScalerParams params;
  for (const auto& row : doc.rows) {
    if (row.size() != 4) {
      throw Error(ErrorCode::MalformedRecord, "scaler sidecar " + path);
    }
    ColumnScale scale;
    scale.column = row[0];
    scale.mean = csv::parse_double(row[1], "mean");
    scale.stddev = csv::parse_double(row[2], "stddev");
    scale.constant = row[3] == "1";
    params.columns.push_back(std::move(scale));
  }
  return params;
}

Split train_test_split(std::size_t n_rows, const SplitSpec& spec) {
  if (spec.test_fraction <= 0.0 || spec.test_fraction >= 1.0) {
    throw Error(ErrorCode::InvalidConfig,
                "test_fraction must lie in (0, 1)");
  }
  if (n_rows < 4) {
    throw Error(ErrorCode::TooFewRows,
                std::to_string(n_rows) + " rows, need at least 4");
  }
  auto perm = shuffled_indices(n_rows, spec.seed);
  auto n_test = static_cast<std::size_t>(
      std::ceil(spec.test_fraction * static_cast<double>(n_rows)));
  Split split;
  split.test_indices.assign(perm.begin(), perm.begin() + n_test);
  split.train_indices.assign(perm.begin() + n_test, perm.end());
  return split;
}

SplitTables apply_split(const FeatureTable& table, const Split& split) {
  auto take = [&table](const std::vector<std::size_t>& indices) {
    FeatureTable out;
    out.columns = table.columns;
    for (std::size_t idx : indices) {
      out.rows.push_back(table.rows[idx]);
      if (idx < table.row_ids.size()) out.row_ids.push_back(table.row_ids[idx]);
    }
    return out;
  };
  return {take(split.train_indices), take(split.test_indices)};
}

ModelMatrix to_matrix(const FeatureTable& table) {
  table.check_rectangular();
  std::size_t label = table.label_index();
  ModelMatrix m;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c != label) m.feature_names.push_back(table.columns[c].name);
  }
  for (const auto& row : table.rows) {
    std::vector<double> x;
    x.reserve(table.columns.size() - 1);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const Cell& cell = row[c];
      if (cell.kind != Cell::Kind::Number) {
        throw Error(ErrorCode::EmptyMatrix, "table is not all-numeric");
      }
      if (c == label) {
        m.y.push_back(cell.number);
      } else {
        x.push_back(cell.number);
      }
    }
    m.x.push_back(std::move(x));
  }
  return m;
}

}  // namespace cricket::preprocess
