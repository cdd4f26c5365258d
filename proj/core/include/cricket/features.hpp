#pragma once

#include <string>

#include "cricket/commentary.hpp"

namespace cricket {

enum class OutNotOut { Out, NotOut };
enum class HomeAway { Home, Away, Neutral };
enum class WinLoss { Win, Loss, Draw, NoResult };
enum class Pitch { Green, Dry, Flat };

const char* to_string(OutNotOut v);
const char* to_string(HomeAway v);
const char* to_string(WinLoss v);
const char* to_string(Pitch v);
OutNotOut out_not_out_from_string(const std::string& s);
HomeAway home_away_from_string(const std::string& s);
WinLoss win_loss_from_string(const std::string& s);
Pitch pitch_from_string(const std::string& s);

/// One player-match row after the commentary join: raw scorecard columns
/// plus control and weather.
struct MatchRecord {
  std::string match_id;
  std::string player;
  int runs = 0;
  int balls_faced = 0;
  int fours = 0;
  int sixes = 0;
  double dot_ball_pct = 0.0;             // 0..100
  OutNotOut out_not_out = OutNotOut::Out;
  HomeAway home_away = HomeAway::Home;
  WinLoss win_loss = WinLoss::Win;
  int team_run = 0;
  int in_at_position = 1;                // 1..11
  int opposition_rank = 1;               // >= 1
  Pitch pitch = Pitch::Flat;
  WeatherCategory weather = WeatherCategory::Clear;
  double control = 0.0;                  // 0..1
  std::string start_date;                // ISO-8601
  std::string ground;
  double strike_rate = 0.0;              // display only, never a feature

  /// Throws Error{InvariantViolation} describing the first failed check.
  void validate() const;
};

/// Columns appended by the pipeline.
struct DerivedFeatures {
  int dot_balls = 0;
  int scoring_shots = 0;
  double scoring_rate = 0.0;     // runs per scoring shot
  int others = 0;                // non-boundary runs
  double running_fraction = 0.0; // others / runs
  int opposition_index = 1;      // 1..5
  double pitch_index = 1.0;      // 2 / 1.5 / 1
  double impact = 0.0;           // runs * e^control
};

/// Rank-group weight: 1-3 -> 5, 4-6 -> 4, 7-9 -> 3, 10-12 -> 2, >=13 -> 1.
/// Throws Error{InvalidRank} for rank < 1.
int opposition_index(int rank);

/// Green -> 2.0, Dry -> 1.5, Flat -> 1.0.
double pitch_index(Pitch pitch);

/// round-half-up(pct * balls_faced / 100), clamped to [0, balls_faced].
/// Throws Error{PercentOutOfRange}.
int dot_balls(double dot_ball_pct, int balls_faced);

/// runs / scoring_shots; 0 when both are 0. Throws Error{InconsistentRow}
/// when runs > 0 with no scoring shots.
double scoring_rate(int runs, int scoring_shots);

struct OthersResult {
  int others = 0;
  double running_fraction = 0.0;
};

/// others = runs - 4*fours - 6*sixes; fraction is others/runs (0 for a
/// duck). Throws Error{BoundaryOverflow} when boundary runs exceed runs.
OthersResult others_and_running_fraction(int runs, int fours, int sixes);

/// runs * exp(control). Throws Error{ControlOutOfRange} outside [0, 1].
double effective_runs(int runs, double control);

/// Applies every derivation above; errors are annotated with the row's
/// match id.
DerivedFeatures build_feature_row(const MatchRecord& record);

}  // namespace cricket
