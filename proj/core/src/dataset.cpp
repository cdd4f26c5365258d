#include "cricket/dataset.hpp"

#include <algorithm>

#include "cricket/error.hpp"

namespace cricket::dataset {

namespace {

const std::vector<std::string> kMatchColumns = {
    "match_id",   "player",      "runs",          "balls_faced",
    "fours",      "sixes",       "strike_rate",   "dot_ball_pct",
    "out_not_out", "home_away",  "win_loss",      "team_run",
    "in_at_position", "opposition_rank", "pitch", "ground",
    "start_date",
};

const std::vector<std::string> kControlColumns = {
    "match_id", "middled", "left_alone", "balls_faced", "control", "weather",
};

const std::vector<std::string> kDerivedExtras = {
    "control",          "weather",        "dot_ball",
    "scoring_shot",     "scoring_rate",   "others",
    "running_fraction", "opposition_index", "pitch_index",
    "impact",
};

std::vector<std::string> build_derived_columns() {
  std::vector<std::string> cols = kMatchColumns;
  cols.insert(cols.end(), kDerivedExtras.begin(), kDerivedExtras.end());
  return cols;
}

// Columns of the derived CSV that hold numbers; everything else is text.
const std::vector<std::string> kNumericDerived = {
    "runs",        "balls_faced", "fours",         "sixes",
    "strike_rate", "dot_ball_pct", "team_run",     "in_at_position",
    "opposition_rank", "control", "dot_ball",      "scoring_shot",
    "scoring_rate", "others",     "running_fraction",
    "opposition_index", "pitch_index",
};

const std::vector<std::string> kCategoricalDerived = {
    "out_not_out", "home_away", "win_loss", "weather", "pitch",
};

bool contains(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t require_column(const csv::Document& doc, const std::string& name,
                           const std::string& path) {
  std::size_t idx = doc.column_index(name);
  if (idx == csv::Document::npos) {
    throw Error(ErrorCode::MissingColumn, name + " in " + path);
  }
  return idx;
}

}  // namespace

const std::vector<std::string>& match_csv_columns() { return kMatchColumns; }
const std::vector<std::string>& control_csv_columns() {
  return kControlColumns;
}
const std::vector<std::string>& derived_csv_columns() {
  static const std::vector<std::string> cols = build_derived_columns();
  return cols;
}

MatchCsv read_match_csv(const std::string& path) {
  csv::Document doc = csv::read_file(path);
  for (const auto& name : kMatchColumns) {
    require_column(doc, name, path);
  }
  MatchCsv out;
  out.header = doc.header;
  out.rows.reserve(doc.rows.size());
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    if (doc.rows[i].size() != doc.header.size()) {
      throw Error(ErrorCode::MalformedRecord,
                  path + ": row " + std::to_string(i + 1) + " has " +
                      std::to_string(doc.rows[i].size()) + " fields, header has " +
                      std::to_string(doc.header.size()));
    }
    out.rows.push_back({i + 1, doc.rows[i]});
  }
  return out;
}

MatchRecord parse_match_row(const MatchCsv& doc, const RawMatchRow& row) {
  auto field = [&](const std::string& name) -> const std::string& {
    for (std::size_t i = 0; i < doc.header.size(); ++i) {
      if (doc.header[i] == name) return row.cells[i];
    }
    throw Error(ErrorCode::MissingColumn, name);
  };
  auto require = [&](const std::string& name) -> const std::string& {
    const std::string& value = field(name);
    if (value.empty()) {
      throw Error(ErrorCode::MalformedRecord, "missing " + name);
    }
    return value;
  };

  MatchRecord rec;
  rec.match_id = require("match_id");
  rec.player = require("player");
  rec.runs = static_cast<int>(csv::parse_int(require("runs"), "runs"));
  rec.balls_faced =
      static_cast<int>(csv::parse_int(require("balls_faced"), "balls_faced"));
  rec.fours = static_cast<int>(csv::parse_int(require("fours"), "fours"));
  rec.sixes = static_cast<int>(csv::parse_int(require("sixes"), "sixes"));
  rec.strike_rate = csv::parse_double(require("strike_rate"), "strike_rate");
  rec.dot_ball_pct =
      csv::parse_double(require("dot_ball_pct"), "dot_ball_pct");
  rec.out_not_out = out_not_out_from_string(require("out_not_out"));
  rec.home_away = home_away_from_string(require("home_away"));
  rec.win_loss = win_loss_from_string(require("win_loss"));
  rec.team_run =
      static_cast<int>(csv::parse_int(require("team_run"), "team_run"));
  rec.in_at_position = static_cast<int>(
      csv::parse_int(require("in_at_position"), "in_at_position"));
  rec.opposition_rank = static_cast<int>(
      csv::parse_int(require("opposition_rank"), "opposition_rank"));
  rec.pitch = pitch_from_string(require("pitch"));
  rec.ground = field("ground");
  rec.start_date = field("start_date");
  return rec;
}

std::vector<ControlRow> read_control_csv(const std::string& path) {
  csv::Document doc = csv::read_file(path);
  for (const auto& name : kControlColumns) {
    require_column(doc, name, path);
  }
  std::size_t id_col = doc.column_index("match_id");
  std::size_t mid_col = doc.column_index("middled");
  std::size_t left_col = doc.column_index("left_alone");
  std::size_t bf_col = doc.column_index("balls_faced");
  std::size_t ctl_col = doc.column_index("control");
  std::size_t wx_col = doc.column_index("weather");

  std::vector<ControlRow> rows;
  rows.reserve(doc.rows.size());
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto& cells = doc.rows[i];
    if (cells.size() != doc.header.size()) {
      throw Error(ErrorCode::MalformedRecord,
                  path + ": row " + std::to_string(i + 1));
    }
    ControlRow row;
    row.match_id = cells[id_col];
    row.middled = static_cast<int>(csv::parse_int(cells[mid_col], "middled"));
    row.left_alone =
        static_cast<int>(csv::parse_int(cells[left_col], "left_alone"));
    row.balls_faced =
        static_cast<int>(csv::parse_int(cells[bf_col], "balls_faced"));
    row.control = csv::parse_double(cells[ctl_col], "control");
    row.weather = weather_from_string(cells[wx_col]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_control_csv(const std::string& path,
                       const std::vector<ControlRow>& rows,
                       const std::string& meta_line) {
  csv::Document doc;
  if (!meta_line.empty()) doc.meta.push_back(meta_line);
  doc.header = kControlColumns;
  for (const auto& row : rows) {
    doc.rows.push_back({row.match_id, std::to_string(row.middled),
                        std::to_string(row.left_alone),
                        std::to_string(row.balls_faced),
                        csv::format_double(row.control),
                        to_string(row.weather)});
  }
  csv::write_file(path, doc);
}

void write_derived_csv(const std::string& path,
                       const std::vector<DerivedRow>& rows,
                       const std::string& meta_line) {
  csv::Document doc;
  if (!meta_line.empty()) doc.meta.push_back(meta_line);
  doc.header = derived_csv_columns();
  for (const auto& row : rows) {
    const MatchRecord& r = row.record;
    const DerivedFeatures& f = row.features;
    doc.rows.push_back({
        r.match_id,
        r.player,
        std::to_string(r.runs),
        std::to_string(r.balls_faced),
        std::to_string(r.fours),
        std::to_string(r.sixes),
        csv::format_double(r.strike_rate),
        csv::format_double(r.dot_ball_pct),
        to_string(r.out_not_out),
        to_string(r.home_away),
        to_string(r.win_loss),
        std::to_string(r.team_run),
        std::to_string(r.in_at_position),
        std::to_string(r.opposition_rank),
        to_string(r.pitch),
        r.ground,
        r.start_date,
        csv::format_double(r.control),
        to_string(r.weather),
        std::to_string(f.dot_balls),
        std::to_string(f.scoring_shots),
        csv::format_double(f.scoring_rate),
        std::to_string(f.others),
        csv::format_double(f.running_fraction),
        std::to_string(f.opposition_index),
        csv::format_double(f.pitch_index),
        csv::format_double(f.impact),
    });
  }
  csv::write_file(path, doc);
}

FeatureTable read_derived_table(const std::string& path) {
  csv::Document doc = csv::read_file(path);
  std::size_t id_col = require_column(doc, "match_id", path);
  require_column(doc, "impact", path);

  FeatureTable table;
  for (const auto& name : doc.header) {
    Column col;
    col.name = name;
    if (name == "impact") {
      col.kind = ColumnKind::Label;
    } else if (contains(kNumericDerived, name)) {
      col.kind = ColumnKind::Numeric;
    } else {
      col.kind = ColumnKind::Categorical;
    }
    table.columns.push_back(col);
  }

  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const auto& cells = doc.rows[r];
    if (cells.size() != doc.header.size()) {
      throw Error(ErrorCode::MalformedRecord,
                  path + ": row " + std::to_string(r + 1));
    }
    std::vector<Cell> row;
    row.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string& value = cells[c];
      const Column& col = table.columns[c];
      if (value.empty()) {
        row.push_back(Cell::missing());
      } else if (col.kind == ColumnKind::Categorical) {
        row.push_back(Cell::txt(value));
      } else {
        row.push_back(Cell::num(csv::parse_double(
            value, col.name + " at row " + std::to_string(r + 1))));
      }
    }
    table.rows.push_back(std::move(row));
    table.row_ids.push_back(cells[id_col]);
  }
  return table;
}

std::vector<std::string> derived_players(const std::string& path) {
  FeatureTable table = read_derived_table(path);
  std::size_t player_col = table.column_index("player");
  std::vector<std::string> players;
  for (const auto& row : table.rows) {
    const std::string& p = row[player_col].text;
    if (!contains(players, p)) players.push_back(p);
  }
  return players;
}

FeatureTable filter_player(const FeatureTable& table,
                           const std::string& player) {
  std::size_t player_col = table.column_index("player");
  FeatureTable out;
  out.columns = table.columns;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r][player_col].text == player) {
      out.rows.push_back(table.rows[r]);
      if (r < table.row_ids.size()) out.row_ids.push_back(table.row_ids[r]);
    }
  }
  return out;
}

}  // namespace cricket::dataset
