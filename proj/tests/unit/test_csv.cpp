#include <doctest.h>

#include <sstream>

#include "cricket/csv.hpp"
#include "cricket/error.hpp"
#include "cricket/rng.hpp"

using namespace cricket;

TEST_CASE("csv read handles quoting, escapes and CRLF") {
  std::istringstream in(
      "a,b,c\r\n"
      "1,\"two, with comma\",3\r\n"
      "\"multi\nline\",\"say \"\"hi\"\"\",x\n");
  auto doc = csv::read(in);
  CHECK(doc.header == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(doc.rows.size() == 2);
  CHECK(doc.rows[0][1] == "two, with comma");
  CHECK(doc.rows[1][0] == "multi\nline");
  CHECK(doc.rows[1][1] == "say \"hi\"");
}

TEST_CASE("csv read keeps the metadata preamble") {
  std::istringstream in(
      "# config_hash=abc seed=42\n"
      "x,y\n"
      "1,2\n");
  auto doc = csv::read(in);
  REQUIRE(doc.meta.size() == 1);
  CHECK(doc.meta[0] == "# config_hash=abc seed=42");
  CHECK(doc.header == std::vector<std::string>{"x", "y"});
  CHECK(doc.rows.size() == 1);
}

TEST_CASE("csv read rejects malformed quoting") {
  std::istringstream unterminated("a,b\n\"open,2\n");
  CHECK_THROWS_AS(csv::read(unterminated), Error);

  std::istringstream stray("a,b\nva\"lue,2\n");
  CHECK_THROWS_AS(csv::read(stray), Error);

  std::istringstream empty("");
  try {
    csv::read(empty);
    FAIL("expected MalformedRecord");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedRecord);
  }
}

TEST_CASE("csv write/read round-trips arbitrary fields") {
  SplitMix64 rng(149);
  const std::string alphabet = "ab,\"\n\r x7";
  for (int trial = 0; trial < 50; ++trial) {
    csv::Document doc;
    std::size_t cols = 2 + rng.bounded(3);
    for (std::size_t c = 0; c < cols; ++c) {
      doc.header.push_back("col" + std::to_string(c));
    }
    std::size_t rows = rng.bounded(6);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < cols; ++c) {
        std::string field;
        std::size_t len = rng.bounded(8);
        for (std::size_t i = 0; i < len; ++i) {
          field.push_back(alphabet[rng.bounded(alphabet.size())]);
        }
        row.push_back(field);
      }
      doc.rows.push_back(row);
    }
    std::ostringstream out;
    csv::write(out, doc);
    std::istringstream in(out.str());
    auto back = csv::read(in);
    CHECK(back.header == doc.header);
    CHECK(back.rows == doc.rows);
  }
}

TEST_CASE("format_double round-trips exactly") {
  SplitMix64 rng(151);
  for (int trial = 0; trial < 1000; ++trial) {
    double value = (rng.uniform01() - 0.5) * std::pow(10.0, rng.bounded(9));
    std::string text = csv::format_double(value);
    double parsed = csv::parse_double(text, "test");
    CHECK(parsed == value);
  }
  CHECK(csv::format_double(0.2) == "0.2");
}

TEST_CASE("parse_double and parse_int reject junk") {
  CHECK(csv::parse_int("42", "n") == 42);
  CHECK(csv::parse_double("-1.5e3", "x") == -1500.0);
  CHECK_THROWS_AS(csv::parse_int("4x", "n"), Error);
  CHECK_THROWS_AS(csv::parse_int("", "n"), Error);
  CHECK_THROWS_AS(csv::parse_double("abc", "x"), Error);
  CHECK_THROWS_AS(csv::parse_double("", "x"), Error);
}
