#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cricket/table.hpp"

namespace cricket::preprocess {

/// drop_incomplete result: the surviving rows plus how many were removed.
struct DropResult {
  FeatureTable table;
  std::size_t dropped = 0;
};

/// Removes every row containing a missing cell, preserving order.
/// Throws Error{AllRowsDropped} when nothing survives.
DropResult drop_incomplete(const FeatureTable& table);

/// The model feature set, in output order. Categorical columns expand to
/// one-hot groups in place during encode().
const std::vector<std::string>& default_feature_columns();

/// Keeps exactly the configured feature columns plus the label; every
/// other column is dropped. Throws Error{MissingColumn} naming the first
/// absent feature.
FeatureTable select_features(const FeatureTable& table,
                             const std::vector<std::string>& features =
                                 default_feature_columns(),
                             const std::string& label = "impact");

/// Fixed category vocabularies (alphabetical one-hot order).
struct CategoricalSpec {
  std::string column;
  std::vector<std::string> categories;  // one-hot column names, in order
};
const std::vector<CategoricalSpec>& categorical_specs();

/// Encodes the selected table to all-numeric form: out_not_out becomes
/// 0/1, the three multi-valued categoricals become one-hot groups with a
/// fixed alphabetical column order. Throws Error{UnknownCategory}.
FeatureTable encode(const FeatureTable& table);

/// Per-column z-score parameters (population standard deviation).
struct ColumnScale {
  std::string column;
  double mean = 0.0;
  double stddev = 0.0;
  bool constant = false;  // std == 0: column passes through unscaled
};

struct ScalerParams {
  std::vector<ColumnScale> columns;
  bool label_scaled = false;

  const ColumnScale* find(const std::string& column) const;
};

/// Fits z-score parameters over every numeric column (one-hot columns
/// included; the label too when scale_label is set, with the inverse
/// transform available for reporting). Throws Error{EmptyMatrix}.
ScalerParams fit_scaler(const FeatureTable& table, bool scale_label = true);

/// (x - mean) / std per column; constant columns pass through.
FeatureTable apply_scaler(const FeatureTable& table,
                          const ScalerParams& params);

/// Inverse transform of a single column's values.
std::vector<double> inverse_scale(const std::vector<double>& values,
                                  const ColumnScale& scale);

/// Serialization of scaler params to/from a sidecar CSV
/// (column,mean,stddev,constant).
void save_scaler(const std::string& path, const ScalerParams& params,
                 const std::string& meta_line = "");
ScalerParams load_scaler(const std::string& path);

struct SplitSpec {
  std::uint64_t seed = 42;
  double test_fraction = 0.25;  // "1:3" read as test:train
};

struct Split {
  std::vector<std::size_t> test_indices;   // in permuted order
  std::vector<std::size_t> train_indices;  // in permuted order
};

/// Seeded Fisher-Yates permutation of row indices; the first
/// ceil(test_fraction * n) permuted rows form the test set. Throws
/// Error{TooFewRows} for fewer than 4 rows and Error{InvalidConfig} for a
/// fraction outside (0, 1).
Split train_test_split(std::size_t n_rows, const SplitSpec& spec);

/// Materializes a split into two tables.
struct SplitTables {
  FeatureTable train;
  FeatureTable test;
};
SplitTables apply_split(const FeatureTable& table, const Split& split);

/// Numeric matrix view of an encoded table: X = feature columns in schema
/// order, y = the label column.
struct ModelMatrix {
  std::vector<std::vector<double>> x;  // row-major
  std::vector<double> y;
  std::vector<std::string> feature_names;
};
ModelMatrix to_matrix(const FeatureTable& table);

}  // namespace cricket::preprocess
