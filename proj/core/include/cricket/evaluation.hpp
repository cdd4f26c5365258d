#pragma once

#include <string>
#include <vector>

#include "cricket/preprocess.hpp"
#include "cricket/table.hpp"

namespace cricket::eval {

/// Coefficient of determination, 1 - SS_res / SS_tot. Throws
/// Error{LengthMismatch} and Error{ConstantActual} (R^2 is undefined for
/// a constant actual series).
double r2_score(const std::vector<double>& actual,
                const std::vector<double>& predicted);

/// Pearson correlations over the numeric columns of a table. Pairs
/// involving a constant column are 0 and flagged.
struct CorrelationMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<bool>> degenerate;  // constant-column pairs
};

/// Throws Error{TooFewRows} for fewer than 2 rows.
CorrelationMatrix pearson_matrix(const FeatureTable& table);

/// Plot-ready paired series in test-row order; when the label was scaled
/// the inverse transform restores original units.
struct ComparisonRow {
  std::size_t index = 0;
  double actual = 0.0;
  double predicted = 0.0;
};
std::vector<ComparisonRow> comparison_series(
    const std::vector<double>& actual, const std::vector<double>& predicted,
    const preprocess::ColumnScale* label_scale = nullptr);

/// One scored (player, model) cell.
struct ResultCell {
  std::string player;
  std::string model;
  double r2 = 0.0;
};

struct ModelRow {
  std::string model;
  std::vector<double> per_player;  // aligned with EvaluationReport::players
  double mean_r2 = 0.0;
};

struct EvaluationReport {
  std::vector<std::string> players;
  std::vector<ModelRow> rows;  // sorted by descending mean r2
};

/// Aggregates cells into the model-by-player accuracy table, sorted by
/// descending mean. Throws Error{EmptyResults}.
EvaluationReport accuracy_report(const std::vector<ResultCell>& cells);

/// Round-half-away-from-zero two-decimal rendering; the CSV report uses
/// it to print r2 values as percentages.
std::string format_two_decimals(double value);

}  // namespace cricket::eval
