#include "cricket/table.hpp"

#include "cricket/error.hpp"

namespace cricket {

std::size_t FeatureTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  throw Error(ErrorCode::MissingColumn, name);
}

bool FeatureTable::has_column(const std::string& name) const {
  for (const auto& c : columns) {
    if (c.name == name) return true;
  }
  return false;
}

std::size_t FeatureTable::label_index() const {
  std::size_t found = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].kind == ColumnKind::Label) {
      if (found != columns.size()) {
        throw Error(ErrorCode::MissingColumn, "more than one label column");
      }
      found = i;
    }
  }
  if (found == columns.size()) {
    throw Error(ErrorCode::MissingColumn, "no label column");
  }
  return found;
}

void FeatureTable::check_rectangular() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " cells, schema has " +
                      std::to_string(columns.size()));
    }
  }
}

}  // namespace cricket
