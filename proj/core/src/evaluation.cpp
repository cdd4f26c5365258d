#include "cricket/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "cricket/error.hpp"

namespace cricket::eval {

double r2_score(const std::vector<double>& actual,
                const std::vector<double>& predicted) {
  if (actual.size() != predicted.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(actual.size()) + " vs " +
                    std::to_string(predicted.size()));
  }
  if (actual.empty()) {
    throw Error(ErrorCode::LengthMismatch, "empty series");
  }
  double mean = 0.0;
  for (double a : actual) mean += a;
  mean /= static_cast<double>(actual.size());

  double ss_tot = 0.0;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    double dt = actual[i] - mean;
    double dr = actual[i] - predicted[i];
    ss_tot += dt * dt;
    ss_res += dr * dr;
  }
  if (ss_tot == 0.0) {
    throw Error(ErrorCode::ConstantActual,
                "actual series is constant; R^2 undefined");
  }
  return 1.0 - ss_res / ss_tot;
}

CorrelationMatrix pearson_matrix(const FeatureTable& table) {
  table.check_rectangular();
  if (table.rows.size() < 2) {
    throw Error(ErrorCode::TooFewRows,
                std::to_string(table.rows.size()) + " rows, need at least 2");
  }

  std::vector<std::size_t> numeric_cols;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (table.columns[c].kind != ColumnKind::Categorical) {
      bool all_number =
          std::all_of(table.rows.begin(), table.rows.end(),
                      [c](const std::vector<Cell>& row) {
                        return row[c].kind == Cell::Kind::Number;
                      });
      if (all_number) numeric_cols.push_back(c);
    }
  }

  const double n = static_cast<double>(table.rows.size());
  std::vector<double> means, stds;
  for (std::size_t c : numeric_cols) {
    double mean = 0.0;
    for (const auto& row : table.rows) mean += row[c].number;
    mean /= n;
    double var = 0.0;
    for (const auto& row : table.rows) {
      double d = row[c].number - mean;
      var += d * d;
    }
    means.push_back(mean);
    stds.push_back(std::sqrt(var / n));
  }

  CorrelationMatrix out;
  for (std::size_t c : numeric_cols) out.labels.push_back(table.columns[c].name);
  const std::size_t k = numeric_cols.size();
  out.values.assign(k, std::vector<double>(k, 0.0));
  out.degenerate.assign(k, std::vector<bool>(k, false));

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      if (stds[a] == 0.0 || stds[b] == 0.0) {
        out.values[a][b] = out.values[b][a] = 0.0;
        out.degenerate[a][b] = out.degenerate[b][a] = true;
        continue;
      }
      if (a == b) {
        out.values[a][b] = 1.0;
        continue;
      }
      double cov = 0.0;
      for (const auto& row : table.rows) {
        cov += (row[numeric_cols[a]].number - means[a]) *
               (row[numeric_cols[b]].number - means[b]);
      }
      cov /= n;
      double r = cov / (stds[a] * stds[b]);
      r = std::clamp(r, -1.0, 1.0);
      out.values[a][b] = out.values[b][a] = r;
    }
  }
  return out;
}

std::vector<ComparisonRow> comparison_series(
    const std::vector<double>& actual, const std::vector<double>& predicted,
    const preprocess::ColumnScale* label_scale) {
  if (actual.size() != predicted.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(actual.size()) + " vs " +
                    std::to_string(predicted.size()));
  }
  std::vector<ComparisonRow> rows;
  rows.reserve(actual.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    ComparisonRow row;
    row.index = i;
    if (label_scale && !label_scale->constant) {
      row.actual = actual[i] * label_scale->stddev + label_scale->mean;
      row.predicted = predicted[i] * label_scale->stddev + label_scale->mean;
    } else {
      row.actual = actual[i];
      row.predicted = predicted[i];
    }
    rows.push_back(row);
  }
  return rows;
}

EvaluationReport accuracy_report(const std::vector<ResultCell>& cells) {
  if (cells.empty()) {
    throw Error(ErrorCode::EmptyResults, "no (player, model) cells");
  }

  EvaluationReport report;
  for (const auto& cell : cells) {
    if (std::find(report.players.begin(), report.players.end(), cell.player) ==
        report.players.end()) {
      report.players.push_back(cell.player);
    }
  }

  std::vector<std::string> model_order;
  std::map<std::string, std::map<std::string, double>> by_model;
  for (const auto& cell : cells) {
    if (!by_model.count(cell.model)) model_order.push_back(cell.model);
    by_model[cell.model][cell.player] = cell.r2;
  }

  for (const auto& model : model_order) {
    ModelRow row;
    row.model = model;
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& player : report.players) {
      auto it = by_model[model].find(player);
      double value = it == by_model[model].end()
                         ? std::numeric_limits<double>::quiet_NaN()
                         : it->second;
      row.per_player.push_back(value);
      if (it != by_model[model].end()) {
        sum += value;
        ++count;
      }
    }
    row.mean_r2 = count ? sum / static_cast<double>(count) : 0.0;
    report.rows.push_back(std::move(row));
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ModelRow& a, const ModelRow& b) {
                     return a.mean_r2 > b.mean_r2;
                   });
  return report;
}

std::string format_two_decimals(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

}  // namespace cricket::eval
