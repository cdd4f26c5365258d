#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cricket {

enum class ShotClass { Middled, LeftAlone, Uncontrolled };
enum class WeatherCategory { Clear, Sunny, Windy, Overcast };

const char* to_string(ShotClass c);
const char* to_string(WeatherCategory w);
WeatherCategory weather_from_string(const std::string& s);

/// One ball of commentary: "18.1" means 1st ball of the 19th over.
struct DeliveryEvent {
  int over = 0;                                  // >= 0
  int ball = 1;                                  // 1..12 (no-ball re-bowls)
  int runs = 0;                                  // >= 0
  std::string text;                              // commentary line, verbatim
  ShotClass shot_class = ShotClass::Uncontrolled;
};

/// Keyword phrase sets for shot classification. Phrases are stored
/// lowercase; the two sets must be disjoint and free of blank entries.
struct ShotLexicon {
  std::set<std::string> middled_phrases;
  std::set<std::string> left_alone_phrases;

  void validate() const;  // throws Error{InvalidLexicon}
};

/// Maps pre-match phrases ("hot and humid") to a weather category.
struct WeatherLexicon {
  std::map<std::string, WeatherCategory> phrase_to_category;

  void validate() const;  // throws Error{InvalidLexicon}
};

struct Lexicon {
  ShotLexicon shots;
  WeatherLexicon weather;
};

/// Loads the lexicon file: JSON with keys "middled", "left_alone"
/// (phrase arrays) and "weather" (phrase -> category map).
Lexicon load_lexicon(const std::string& path);
Lexicon parse_lexicon(const std::string& json_text);

/// Per-innings counts. middled + left_alone <= balls_faced.
struct ShotTally {
  int middled = 0;
  int left_alone = 0;
  int balls_faced = 0;
};

/// Result of extract_weather; `defaulted` marks the no-match fallback so
/// reports can count how often the default fired.
struct WeatherResult {
  WeatherCategory category = WeatherCategory::Clear;
  bool defaulted = false;
};

/// Lowercases ASCII and collapses whitespace runs to single spaces.
std::string normalize_text(const std::string& text);

/// Parses one delivery record (over-ball token, runs token, commentary).
/// Runs token: "•" or "no run" -> 0, "FOUR"/"4" -> 4, "SIX"/"6" -> 6,
/// plain non-negative integer otherwise. Throws Error{MalformedOverToken}
/// or Error{MalformedRunsToken}.
DeliveryEvent parse_delivery(const std::string& over_ball,
                             const std::string& runs_token,
                             const std::string& text);

/// Inverse of parse_delivery on well-formed records ("<over>.<ball>",
/// decimal runs, verbatim text).
struct DeliveryRecord {
  std::string over_ball;
  std::string runs;
  std::string text;
};
DeliveryRecord serialize_delivery(const DeliveryEvent& event);

/// Case-insensitive substring match of lexicon phrases against the
/// normalized text. LeftAlone takes precedence over Middled when both
/// sets match; no match is Uncontrolled, never an error.
ShotClass classify_shot(const DeliveryEvent& event, const ShotLexicon& lexicon);

/// Counts classify_shot outcomes over an innings.
/// Throws Error{EmptyInnings} on an empty sequence.
ShotTally tally_innings(const std::vector<DeliveryEvent>& events,
                        const ShotLexicon& lexicon);

/// (middled + left_alone) / balls_faced. Throws Error{ZeroBallsFaced}.
double compute_control(const ShotTally& tally);

/// First matching phrase wins, longest phrase tried first; no match
/// defaults to Clear with the defaulted flag set.
WeatherResult extract_weather(const std::string& prematch_text,
                              const WeatherLexicon& lexicon);

/// Mean absolute relative deviation (%) between calculated and published
/// control series. Throws Error{LengthMismatch}, Error{EmptySeries} or
/// Error{NonPositiveActual}.
double validate_against_published(const std::vector<double>& calculated,
                                  const std::vector<double>& actual);

}  // namespace cricket
