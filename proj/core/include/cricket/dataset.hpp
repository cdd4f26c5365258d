#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cricket/csv.hpp"
#include "cricket/features.hpp"
#include "cricket/table.hpp"

namespace cricket::dataset {

/// Column order of the match input CSV (one row per player-match).
const std::vector<std::string>& match_csv_columns();

/// Column order of the per-innings control CSV emitted by
/// parse-commentary and consumed by build-features.
const std::vector<std::string>& control_csv_columns();

/// Derived CSV: the match columns followed by the commentary join and
/// every derived column, `impact` last.
const std::vector<std::string>& derived_csv_columns();

struct ControlRow {
  std::string match_id;
  int middled = 0;
  int left_alone = 0;
  int balls_faced = 0;
  double control = 0.0;
  WeatherCategory weather = WeatherCategory::Clear;
};

/// Match CSV rows paired with their 1-based data record number (used in
/// exclusion reports). Cells are raw strings; typed parsing happens in
/// parse_match_row so a bad row can be excluded rather than aborting the
/// file.
struct RawMatchRow {
  std::size_t record_number = 0;
  std::vector<std::string> cells;
};

struct MatchCsv {
  std::vector<std::string> header;
  std::vector<RawMatchRow> rows;
};

MatchCsv read_match_csv(const std::string& path);

/// Typed parse of one match row; control and weather are joined later.
/// Throws Error{MalformedRecord} (missing or unparseable cell) with the
/// offending column named.
MatchRecord parse_match_row(const MatchCsv& doc, const RawMatchRow& row);

std::vector<ControlRow> read_control_csv(const std::string& path);
void write_control_csv(const std::string& path,
                       const std::vector<ControlRow>& rows,
                       const std::string& meta_line);

struct DerivedRow {
  MatchRecord record;
  DerivedFeatures features;
};

void write_derived_csv(const std::string& path,
                       const std::vector<DerivedRow>& rows,
                       const std::string& meta_line);

/// Loads a derived CSV into a typed FeatureTable: numeric columns parse
/// to numbers, categorical columns keep canonical spellings, `impact` is
/// the label and empty cells become missing markers. Row ids take the
/// match_id column.
FeatureTable read_derived_table(const std::string& path);

/// The players present in a derived CSV, in first-appearance order.
std::vector<std::string> derived_players(const std::string& path);

/// Rows of a derived table whose `player` column matches.
FeatureTable filter_player(const FeatureTable& table,
                           const std::string& player);

}  // namespace cricket::dataset
