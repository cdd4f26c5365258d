#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "cricket/commentary.hpp"
#include "cricket/csv.hpp"
#include "cricket/error.hpp"
#include "cricket/rng.hpp"

using namespace cricket;

namespace {

ShotLexicon example_shots() {
  ShotLexicon lex;
  lex.middled_phrases = {"defended", "swayed", "drives firmly and straight",
                         "controlled"};
  lex.left_alone_phrases = {"ducked", "stepped away", "no shot offered",
                            "shoulders arm"};
  return lex;
}

WeatherLexicon example_weather() {
  WeatherLexicon lex;
  lex.phrase_to_category = {
      {"hot and humid", WeatherCategory::Sunny},
      {"breezy", WeatherCategory::Windy},
      {"cloudy and dark skies", WeatherCategory::Overcast},
  };
  return lex;
}

std::vector<DeliveryEvent> load_fixture_innings() {
  auto doc =
      csv::read_file(std::string(CRICKET_DATA_DIR) +
                     "/fixtures/five_delivery_innings.csv");
  std::vector<DeliveryEvent> events;
  for (const auto& row : doc.rows) {
    events.push_back(parse_delivery(row[0], row[1], row[2]));
  }
  return events;
}

}  // namespace

TEST_CASE("parse_delivery splits the over token and normalizes runs") {
  auto e = parse_delivery("18.1", "4", "drill a square-cut for four");
  CHECK(e.over == 18);
  CHECK(e.ball == 1);
  CHECK(e.runs == 4);
  CHECK(e.shot_class == ShotClass::Uncontrolled);

  auto dot = parse_delivery("5.2", "\xE2\x80\xA2", "shoulders arms");
  CHECK(dot.over == 5);
  CHECK(dot.ball == 2);
  CHECK(dot.runs == 0);

  CHECK(parse_delivery("0.3", "no run", "x").runs == 0);
  CHECK(parse_delivery("0.3", "FOUR", "x").runs == 4);
  CHECK(parse_delivery("0.3", "SIX", "x").runs == 6);
  CHECK(parse_delivery("49.6", "2", "x").runs == 2);
  CHECK(parse_delivery("0.3", "1", "x").text == "x");
}

TEST_CASE("parse_delivery rejects malformed tokens") {
  CHECK_THROWS_WITH_AS(parse_delivery("18", "4", "x"), doctest::Contains("dot"),
                       Error);
  CHECK_THROWS_AS(parse_delivery("a.b", "4", "x"), Error);
  CHECK_THROWS_AS(parse_delivery("18.", "4", "x"), Error);
  CHECK_THROWS_AS(parse_delivery("18.0", "4", "x"), Error);   // ball >= 1
  CHECK_THROWS_AS(parse_delivery("18.13", "4", "x"), Error);  // re-bowl cap
  CHECK(parse_delivery("18.12", "4", "x").ball == 12);

  try {
    parse_delivery("18.1", "FIVE", "x");
    FAIL("expected MalformedRunsToken");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedRunsToken);
  }
  try {
    parse_delivery("18", "4", "x");
    FAIL("expected MalformedOverToken");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedOverToken);
  }
}

TEST_CASE("classify_shot matches lexicon phrases case-insensitively") {
  auto lex = example_shots();
  DeliveryEvent e;

  e.text = "he plays it safe and shoulders arms at it";
  CHECK(classify_shot(e, lex) == ShotClass::LeftAlone);

  e.text = "defended solidly off the back foot";
  CHECK(classify_shot(e, lex) == ShotClass::Middled);

  e.text = "he mistimes a pull";
  CHECK(classify_shot(e, lex) == ShotClass::Uncontrolled);

  // Whitespace normalization: phrase matches across runs of spaces.
  e.text = "He  DEFENDED   that one";
  CHECK(classify_shot(e, lex) == ShotClass::Middled);

  // Left-alone wins when both sets match one line.
  e.text = "ducked under it, having defended the previous one";
  CHECK(classify_shot(e, lex) == ShotClass::LeftAlone);

  e.text = "";
  CHECK(classify_shot(e, lex) == ShotClass::Uncontrolled);
}

TEST_CASE("classify_shot depends only on text and lexicon") {
  auto lex = example_shots();
  SplitMix64 rng(7);
  std::vector<std::string> texts = {
      "defended into the covers", "ducked again", "beaten outside off",
      "no shot offered", "swayed away late"};
  std::vector<ShotClass> first;
  for (const auto& t : texts) {
    DeliveryEvent e;
    e.text = t;
    first.push_back(classify_shot(e, lex));
  }
  // Shuffled evaluation order changes nothing.
  for (int round = 0; round < 10; ++round) {
    auto order = shuffled_indices(texts.size(), rng.next());
    for (std::size_t i : order) {
      DeliveryEvent e;
      e.text = texts[i];
      CHECK(classify_shot(e, lex) == first[i]);
    }
  }
}

TEST_CASE("tally_innings counts the fixture innings") {
  auto lex = example_shots();
  auto events = load_fixture_innings();
  REQUIRE(events.size() == 5);
  auto tally = tally_innings(events, lex);
  CHECK(tally.middled == 0);
  CHECK(tally.left_alone == 1);
  CHECK(tally.balls_faced == 5);

  DeliveryEvent one;
  one.text = "defended with soft hands";
  auto single = tally_innings({one}, lex);
  CHECK(single.middled == 1);
  CHECK(single.left_alone == 0);
  CHECK(single.balls_faced == 1);

  CHECK_THROWS_AS(tally_innings({}, lex), Error);
}

TEST_CASE("tally partition property: middled + left + uncontrolled = balls") {
  auto lex = example_shots();
  SplitMix64 rng(11);
  std::vector<std::string> pool = {
      "defended",      "ducked",          "beaten",          "no shot offered",
      "swayed inside", "glanced to fine", "stepped away",    "cut hard",
      "controlled pull", "driven on the up"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<DeliveryEvent> events;
    std::size_t n = 1 + rng.bounded(40);
    int uncontrolled = 0;
    for (std::size_t i = 0; i < n; ++i) {
      DeliveryEvent e;
      e.text = pool[rng.bounded(pool.size())];
      events.push_back(e);
    }
    for (const auto& e : events) {
      if (classify_shot(e, lex) == ShotClass::Uncontrolled) ++uncontrolled;
    }
    auto tally = tally_innings(events, lex);
    CHECK(tally.middled + tally.left_alone + uncontrolled ==
          tally.balls_faced);
    CHECK(tally.middled + tally.left_alone <= tally.balls_faced);
  }
}

TEST_CASE("compute_control is the controlled fraction") {
  CHECK(compute_control({40, 10, 100}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(compute_control({0, 0, 37}) == 0.0);
  CHECK(compute_control({0, 1, 5}) == 0.2);

  try {
    compute_control({0, 0, 0});
    FAIL("expected ZeroBallsFaced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroBallsFaced);
  }
}

TEST_CASE("control bounds and monotonicity") {
  auto lex = example_shots();
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    ShotTally t;
    t.balls_faced = 1 + static_cast<int>(rng.bounded(200));
    t.middled = static_cast<int>(rng.bounded(t.balls_faced + 1));
    t.left_alone =
        static_cast<int>(rng.bounded(t.balls_faced - t.middled + 1));
    double c = compute_control(t);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    bool all_controlled = t.middled + t.left_alone == t.balls_faced;
    CHECK((c == 1.0) == all_controlled);

    // One more middled ball never decreases control.
    ShotTally plus_mid{t.middled + 1, t.left_alone, t.balls_faced + 1};
    CHECK(compute_control(plus_mid) >= c);
    // One more uncontrolled ball never increases it.
    ShotTally plus_unc{t.middled, t.left_alone, t.balls_faced + 1};
    CHECK(compute_control(plus_unc) <= c);
  }
}

TEST_CASE("parse then serialize is the identity on well-formed records") {
  SplitMix64 rng(17);
  std::vector<std::string> texts = {"driven hard", "left well alone",
                                    "climbs off a length", "x"};
  for (int trial = 0; trial < 200; ++trial) {
    DeliveryEvent e;
    e.over = static_cast<int>(rng.bounded(50));
    e.ball = 1 + static_cast<int>(rng.bounded(12));
    e.runs = static_cast<int>(rng.bounded(7));
    e.text = texts[rng.bounded(texts.size())];
    auto rec = serialize_delivery(e);
    auto back = parse_delivery(rec.over_ball, rec.runs, rec.text);
    CHECK(back.over == e.over);
    CHECK(back.ball == e.ball);
    CHECK(back.runs == e.runs);
    CHECK(back.text == e.text);
  }
}

TEST_CASE("extract_weather prefers the longest matching phrase") {
  auto lex = example_weather();

  CHECK(extract_weather("a hot and humid afternoon", lex).category ==
        WeatherCategory::Sunny);
  CHECK_FALSE(extract_weather("a hot and humid afternoon", lex).defaulted);
  CHECK(extract_weather("breezy conditions expected", lex).category ==
        WeatherCategory::Windy);

  auto defaulted = extract_weather("", lex);
  CHECK(defaulted.category == WeatherCategory::Clear);
  CHECK(defaulted.defaulted);

  // Longest phrase first: add an ambiguous shorter phrase.
  lex.phrase_to_category["cloudy"] = WeatherCategory::Windy;
  CHECK(extract_weather("cloudy and dark skies above", lex).category ==
        WeatherCategory::Overcast);
}

TEST_CASE("validate_against_published computes mean relative deviation") {
  CHECK(validate_against_published({0.5, 0.7}, {0.5, 0.7}) == 0.0);
  CHECK(validate_against_published({0.5}, {0.4}) ==
        doctest::Approx(25.0).epsilon(1e-12));
  CHECK(validate_against_published({0.48, 0.80}, {0.50, 0.80}) ==
        doctest::Approx(2.0).epsilon(1e-12));

  try {
    validate_against_published({0.5}, {0.4, 0.5});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
  try {
    validate_against_published({}, {});
    FAIL("expected EmptySeries");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySeries);
  }
  try {
    validate_against_published({0.5}, {0.0});
    FAIL("expected NonPositiveActual");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveActual);
  }
}

TEST_CASE("lexicon validation") {
  CHECK_THROWS_AS(parse_lexicon("{"), Error);
  CHECK_THROWS_AS(parse_lexicon(R"({"middled": ["a"]})"), Error);

  // Overlapping phrase sets are rejected.
  CHECK_THROWS_AS(parse_lexicon(R"({
    "middled": ["defended"],
    "left_alone": ["defended"],
    "weather": {}
  })"),
                  Error);
  // Blank phrases are rejected.
  CHECK_THROWS_AS(parse_lexicon(R"({
    "middled": ["  "],
    "left_alone": [],
    "weather": {}
  })"),
                  Error);
  // Unknown weather category.
  CHECK_THROWS_AS(parse_lexicon(R"({
    "middled": [],
    "left_alone": [],
    "weather": {"foggy morning": "Foggy"}
  })"),
                  Error);

  auto lex = parse_lexicon(R"({
    "middled": ["Defended"],
    "left_alone": ["no shot  offered"],
    "weather": {"HOT AND HUMID": "Sunny"}
  })");
  CHECK(lex.shots.middled_phrases.count("defended") == 1);
  CHECK(lex.shots.left_alone_phrases.count("no shot offered") == 1);
  CHECK(lex.weather.phrase_to_category.count("hot and humid") == 1);
}

TEST_CASE("shipped lexicon file loads and matches the documented phrases") {
  auto lex = load_lexicon(std::string(CRICKET_DATA_DIR) + "/lexicon.json");
  CHECK(lex.shots.middled_phrases.size() == 4);
  CHECK(lex.shots.left_alone_phrases.size() == 4);
  CHECK(lex.weather.phrase_to_category.size() == 3);
  CHECK(lex.shots.left_alone_phrases.count("shoulders arm") == 1);
}
