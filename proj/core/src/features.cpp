#include "cricket/features.hpp"

#include <cmath>

#include "cricket/error.hpp"

namespace cricket {

const char* to_string(OutNotOut v) {
  return v == OutNotOut::Out ? "Out" : "NotOut";
}

const char* to_string(HomeAway v) {
  switch (v) {
    case HomeAway::Home: return "Home";
    case HomeAway::Away: return "Away";
    case HomeAway::Neutral: return "Neutral";
  }
  return "?";
}

const char* to_string(WinLoss v) {
  switch (v) {
    case WinLoss::Win: return "Win";
    case WinLoss::Loss: return "Loss";
    case WinLoss::Draw: return "Draw";
    case WinLoss::NoResult: return "NoResult";
  }
  return "?";
}

const char* to_string(Pitch v) {
  switch (v) {
    case Pitch::Green: return "Green";
    case Pitch::Dry: return "Dry";
    case Pitch::Flat: return "Flat";
  }
  return "?";
}

OutNotOut out_not_out_from_string(const std::string& s) {
  std::string t = normalize_text(s);
  if (t == "out") return OutNotOut::Out;
  if (t == "notout" || t == "not out") return OutNotOut::NotOut;
  throw Error(ErrorCode::UnknownCategory, "out_not_out \"" + s + "\"");
}

HomeAway home_away_from_string(const std::string& s) {
  std::string t = normalize_text(s);
  if (t == "home") return HomeAway::Home;
  if (t == "away") return HomeAway::Away;
  if (t == "neutral") return HomeAway::Neutral;
  throw Error(ErrorCode::UnknownCategory, "home_away \"" + s + "\"");
}

WinLoss win_loss_from_string(const std::string& s) {
  std::string t = normalize_text(s);
  if (t == "win") return WinLoss::Win;
  if (t == "loss") return WinLoss::Loss;
  if (t == "draw") return WinLoss::Draw;
  if (t == "noresult" || t == "no result") return WinLoss::NoResult;
  throw Error(ErrorCode::UnknownCategory, "win_loss \"" + s + "\"");
}

Pitch pitch_from_string(const std::string& s) {
  std::string t = normalize_text(s);
  if (t == "green") return Pitch::Green;
  if (t == "dry") return Pitch::Dry;
  if (t == "flat") return Pitch::Flat;
  throw Error(ErrorCode::UnknownCategory, "pitch \"" + s + "\"");
}

void MatchRecord::validate() const {
  auto fail = [this](const std::string& why) {
    throw Error(ErrorCode::InvariantViolation,
                "match " + match_id + ": " + why);
  };
  if (runs < 0) fail("runs < 0");
  if (balls_faced < 0) fail("balls_faced < 0");
  if (fours < 0 || sixes < 0) fail("negative boundary count");
  if (4 * fours + 6 * sixes > runs) fail("boundary runs exceed total runs");
  if (dot_ball_pct < 0.0 || dot_ball_pct > 100.0)
    fail("dot_ball_pct outside [0, 100]");
  if (control < 0.0 || control > 1.0) fail("control outside [0, 1]");
  if (in_at_position < 1 || in_at_position > 11)
    fail("in_at_position outside [1, 11]");
  if (opposition_rank < 1) fail("opposition_rank < 1");
  if (team_run < 0) fail("team_run < 0");
}

int opposition_index(int rank) {
  if (rank < 1) {
    throw Error(ErrorCode::InvalidRank, "rank " + std::to_string(rank));
  }
  if (rank <= 3) return 5;
  if (rank <= 6) return 4;
  if (rank <= 9) return 3;
  if (rank <= 12) return 2;
  return 1;
}

double pitch_index(Pitch pitch) {
  switch (pitch) {
    case Pitch::Green: return 2.0;
    case Pitch::Dry: return 1.5;
    case Pitch::Flat: return 1.0;
  }
  return 1.0;
}

int dot_balls(double dot_ball_pct, int balls_faced) {
  if (dot_ball_pct < 0.0 || dot_ball_pct > 100.0) {
    throw Error(ErrorCode::PercentOutOfRange,
                std::to_string(dot_ball_pct));
  }
  if (balls_faced < 0) {
    throw Error(ErrorCode::PercentOutOfRange, "balls_faced < 0");
  }
  int count = static_cast<int>(
      std::floor(dot_ball_pct * balls_faced / 100.0 + 0.5));
  if (count < 0) count = 0;
  if (count > balls_faced) count = balls_faced;
  return count;
}

double scoring_rate(int runs, int scoring_shots) {
  if (runs < 0 || scoring_shots < 0) {
    throw Error(ErrorCode::InconsistentRow, "negative counts");
  }
  if (scoring_shots == 0) {
    if (runs > 0) {
      throw Error(ErrorCode::InconsistentRow,
                  std::to_string(runs) + " runs with no scoring shots");
    }
    return 0.0;
  }
  return static_cast<double>(runs) / static_cast<double>(scoring_shots);
}

OthersResult others_and_running_fraction(int runs, int fours, int sixes) {
  int boundary_runs = 4 * fours + 6 * sixes;
  if (boundary_runs > runs) {
    throw Error(ErrorCode::BoundaryOverflow,
                std::to_string(boundary_runs) + " boundary runs > " +
                    std::to_string(runs) + " total");
  }
  OthersResult result;
  result.others = runs - boundary_runs;
  result.running_fraction =
      runs == 0 ? 0.0
                : static_cast<double>(result.others) / static_cast<double>(runs);
  return result;
}

double effective_runs(int runs, double control) {
  if (control < 0.0 || control > 1.0) {
    throw Error(ErrorCode::ControlOutOfRange, std::to_string(control));
  }
  if (runs < 0) {
    throw Error(ErrorCode::ControlOutOfRange, "runs < 0");
  }
  return static_cast<double>(runs) * std::exp(control);
}

DerivedFeatures build_feature_row(const MatchRecord& record) {
  record.validate();
  try {
    DerivedFeatures out;
    out.dot_balls = dot_balls(record.dot_ball_pct, record.balls_faced);
    out.scoring_shots = record.balls_faced - out.dot_balls;
    out.scoring_rate = scoring_rate(record.runs, out.scoring_shots);
    auto others = others_and_running_fraction(record.runs, record.fours,
                                              record.sixes);
    out.others = others.others;
    out.running_fraction = others.running_fraction;
    out.opposition_index = opposition_index(record.opposition_rank);
    out.pitch_index = pitch_index(record.pitch);
    out.impact = effective_runs(record.runs, record.control);
    return out;
  } catch (const Error& e) {
    throw Error(e.code(), "match " + record.match_id + ": " + e.message());
  }
}

}  // namespace cricket
