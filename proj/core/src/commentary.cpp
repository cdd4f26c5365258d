#include "cricket/commentary.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cricket/error.hpp"

namespace cricket {

const char* to_string(ShotClass c) {
  switch (c) {
    case ShotClass::Middled: return "Middled";
    case ShotClass::LeftAlone: return "LeftAlone";
    case ShotClass::Uncontrolled: return "Uncontrolled";
  }
  return "?";
}

const char* to_string(WeatherCategory w) {
  switch (w) {
    case WeatherCategory::Clear: return "Clear";
    case WeatherCategory::Sunny: return "Sunny";
    case WeatherCategory::Windy: return "Windy";
    case WeatherCategory::Overcast: return "Overcast";
  }
  return "?";
}

WeatherCategory weather_from_string(const std::string& s) {
  std::string t = normalize_text(s);
  if (t == "clear") return WeatherCategory::Clear;
  if (t == "sunny") return WeatherCategory::Sunny;
  if (t == "windy") return WeatherCategory::Windy;
  if (t == "overcast") return WeatherCategory::Overcast;
  throw Error(ErrorCode::UnknownCategory, "weather \"" + s + "\"");
}

std::string normalize_text(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

void ShotLexicon::validate() const {
  auto check_set = [](const std::set<std::string>& phrases,
                      const char* name) {
    for (const auto& p : phrases) {
      if (normalize_text(p).empty()) {
        throw Error(ErrorCode::InvalidLexicon,
                    std::string(name) + " contains a blank phrase");
      }
    }
  };
  check_set(middled_phrases, "middled");
  check_set(left_alone_phrases, "left_alone");
  for (const auto& p : middled_phrases) {
    if (left_alone_phrases.count(p)) {
      throw Error(ErrorCode::InvalidLexicon,
                  "phrase \"" + p + "\" appears in both middled and left_alone");
    }
  }
}

void WeatherLexicon::validate() const {
  for (const auto& [phrase, cat] : phrase_to_category) {
    (void)cat;
    if (normalize_text(phrase).empty()) {
      throw Error(ErrorCode::InvalidLexicon, "weather lexicon has a blank phrase");
    }
  }
}

Lexicon parse_lexicon(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidLexicon, e.what());
  }
  Lexicon lex;
  try {
    for (const auto& p : j.at("middled")) {
      lex.shots.middled_phrases.insert(normalize_text(p.get<std::string>()));
    }
    for (const auto& p : j.at("left_alone")) {
      lex.shots.left_alone_phrases.insert(normalize_text(p.get<std::string>()));
    }
    for (const auto& [phrase, cat] : j.at("weather").items()) {
      lex.weather.phrase_to_category[normalize_text(phrase)] =
          weather_from_string(cat.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidLexicon, e.what());
  }
  lex.shots.validate();
  lex.weather.validate();
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::MissingInput, "cannot open lexicon " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

DeliveryEvent parse_delivery(const std::string& over_ball,
                             const std::string& runs_token,
                             const std::string& text) {
  std::string token = trim(over_ball);
  std::size_t dot = token.find('.');
  if (dot == std::string::npos) {
    throw Error(ErrorCode::MalformedOverToken,
                "\"" + over_ball + "\" has no dot");
  }
  std::string over_part = token.substr(0, dot);
  std::string ball_part = token.substr(dot + 1);
  if (!all_digits(over_part) || !all_digits(ball_part)) {
    throw Error(ErrorCode::MalformedOverToken,
                "\"" + over_ball + "\" is not <digits>.<digits>");
  }

  DeliveryEvent event;
  event.over = std::stoi(over_part);
  event.ball = std::stoi(ball_part);
  if (event.ball < 1 || event.ball > 12) {
    throw Error(ErrorCode::MalformedOverToken,
                "ball component " + ball_part + " outside 1..12");
  }

  std::string runs = normalize_text(runs_token);
  if (runs == "\xE2\x80\xA2" || runs == "no run") {
    event.runs = 0;
  } else if (runs == "four") {
    event.runs = 4;
  } else if (runs == "six") {
    event.runs = 6;
  } else if (all_digits(runs)) {
    event.runs = std::stoi(runs);
  } else {
    throw Error(ErrorCode::MalformedRunsToken, "\"" + runs_token + "\"");
  }

  event.text = text;
  event.shot_class = ShotClass::Uncontrolled;
  return event;
}

DeliveryRecord serialize_delivery(const DeliveryEvent& event) {
  DeliveryRecord rec;
  rec.over_ball = std::to_string(event.over) + "." + std::to_string(event.ball);
  rec.runs = std::to_string(event.runs);
  rec.text = event.text;
  return rec;
}

ShotClass classify_shot(const DeliveryEvent& event,
                        const ShotLexicon& lexicon) {
  std::string text = normalize_text(event.text);
  auto any_match = [&text](const std::set<std::string>& phrases) {
    for (const auto& phrase : phrases) {
      if (text.find(phrase) != std::string::npos) return true;
    }
    return false;
  };
  // A left-alone delivery involves no shot; a middled-phrase
  // co-occurrence in the same line is narrative noise.
  if (any_match(lexicon.left_alone_phrases)) return ShotClass::LeftAlone;
  if (any_match(lexicon.middled_phrases)) return ShotClass::Middled;
  return ShotClass::Uncontrolled;
}

ShotTally tally_innings(const std::vector<DeliveryEvent>& events,
                        const ShotLexicon& lexicon) {
  if (events.empty()) {
    throw Error(ErrorCode::EmptyInnings, "no deliveries");
  }
  ShotTally tally;
  tally.balls_faced = static_cast<int>(events.size());
  for (const auto& event : events) {
    switch (classify_shot(event, lexicon)) {
      case ShotClass::Middled: ++tally.middled; break;
      case ShotClass::LeftAlone: ++tally.left_alone; break;
      case ShotClass::Uncontrolled: break;
    }
  }
  return tally;
}

double compute_control(const ShotTally& tally) {
  if (tally.balls_faced <= 0) {
    throw Error(ErrorCode::ZeroBallsFaced, "balls_faced must be positive");
  }
  return static_cast<double>(tally.middled + tally.left_alone) /
         static_cast<double>(tally.balls_faced);
}

WeatherResult extract_weather(const std::string& prematch_text,
                              const WeatherLexicon& lexicon) {
  std::string text = normalize_text(prematch_text);
  // Longest phrase first so "cloudy and dark skies" beats "cloudy".
  std::vector<const std::pair<const std::string, WeatherCategory>*> order;
  order.reserve(lexicon.phrase_to_category.size());
  for (const auto& entry : lexicon.phrase_to_category) order.push_back(&entry);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size())
      return a->first.size() > b->first.size();
    return a->first < b->first;
  });
  for (const auto* entry : order) {
    if (text.find(entry->first) != std::string::npos) {
      return {entry->second, false};
    }
  }
  return {WeatherCategory::Clear, true};
}

double validate_against_published(const std::vector<double>& calculated,
                                  const std::vector<double>& actual) {
  if (calculated.size() != actual.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(calculated.size()) + " vs " +
                    std::to_string(actual.size()));
  }
  if (calculated.empty()) {
    throw Error(ErrorCode::EmptySeries, "no control pairs");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < calculated.size(); ++i) {
    if (actual[i] <= 0.0) {
      throw Error(ErrorCode::NonPositiveActual,
                  "actual[" + std::to_string(i) + "] = " +
                      std::to_string(actual[i]));
    }
    sum += std::abs(calculated[i] - actual[i]) / actual[i];
  }
  return sum / static_cast<double>(calculated.size()) * 100.0;
}

}  // namespace cricket
