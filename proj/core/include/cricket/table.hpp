#pragma once

#include <string>
#include <vector>

namespace cricket {

enum class ColumnKind { Numeric, Categorical, Label };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::Numeric;
};

/// One table cell: a number, a category text, or a missing marker.
struct Cell {
  enum class Kind { Missing, Number, Text };
  Kind kind = Kind::Missing;
  double number = 0.0;
  std::string text;

  static Cell missing() { return {}; }
  static Cell num(double v) { return {Kind::Number, v, {}}; }
  static Cell txt(std::string v) { return {Kind::Text, 0.0, std::move(v)}; }

  bool is_missing() const { return kind == Kind::Missing; }
};

/// Rectangular dataset with a column schema. Exactly one Label column is
/// required by the preprocessing operations; row ids carry through splits
/// and manifests.
struct FeatureTable {
  std::vector<Column> columns;
  std::vector<std::string> row_ids;              // one per row, may be empty
  std::vector<std::vector<Cell>> rows;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_cols() const { return columns.size(); }

  /// Index of a named column; throws Error{MissingColumn} if absent.
  std::size_t column_index(const std::string& name) const;
  bool has_column(const std::string& name) const;

  /// Index of the unique Label column; throws Error{MissingColumn} when
  /// there is not exactly one.
  std::size_t label_index() const;

  /// Throws Error{ShapeMismatch} if any row length differs from the schema.
  void check_rectangular() const;
};

}  // namespace cricket
