#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "gramlab/errors.hpp"
#include "gramlab/sequence_io.hpp"
#include "gramlab/verifier.hpp"

using namespace gramlab;

TEST_CASE("fmt17 round-trips doubles exactly") {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double x = std::ldexp(unit(rng), trial % 60 - 30);
    const std::string text = fmt17(x);
    CHECK(std::strtod(text.c_str(), nullptr) == x);
  }
  CHECK(fmt17(0.5) == "0.5");
  CHECK(fmt17(kPInf) == "inf");
}

TEST_CASE("p parsing") {
  CHECK(parse_p("2") == 2.0);
  CHECK(parse_p("2.5") == 2.5);
  CHECK(parse_p("inf") == kPInf);
  CHECK_THROWS_AS(parse_p("two"), ParseError);
  CHECK(p_to_string(kPInf) == "inf");
  CHECK(p_to_string(2.5) == "2.5");
}

TEST_CASE("complex token parsing") {
  CHECK(parse_complex("0.3") == Complex(0.3, 0));
  CHECK(parse_complex("-0.25") == Complex(-0.25, 0));
  CHECK(parse_complex("0.3+0.2i") == Complex(0.3, 0.2));
  CHECK(parse_complex("0.3-0.2j") == Complex(0.3, -0.2));
  CHECK(parse_complex("1e-3-2e-4i") == Complex(1e-3, -2e-4));
  CHECK(parse_complex("0.5i") == Complex(0, 0.5));
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex("0.3+"), ParseError);
}

TEST_CASE("points files round-trip exactly") {
  std::mt19937_64 rng(82);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts;
  for (int k = 0; k < 9; ++k) {
    pts.push_back(std::polar(0.93 * std::sqrt(unit(rng)),
                             2.0 * M_PI * unit(rng)));
  }
  const PointSequence seq(pts);
  const std::string text = write_points_json(seq);
  const SequenceFile file = parse_sequence_file(text);
  REQUIRE(file.points.has_value());
  const PointSequence back = file.realize();
  REQUIRE(back.size() == seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    CHECK(back[k] == seq[k]);  // bit-exact through 17 digits
  }
}

TEST_CASE("generator files realize through the generator") {
  const std::string text = R"({
    "generator": {"family": "geometric", "sigma": 0.5, "count": 3}
  })";
  const PointSequence seq = parse_sequence_file(text).realize();
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == Complex(0.5, 0));
  CHECK(seq[2] == Complex(0.875, 0));

  const std::string explicit_text = R"({
    "generator": {"family": "explicit",
                  "points": [{"re": 0.1, "im": 0.2}]}
  })";
  CHECK(parse_sequence_file(explicit_text).realize()[0] == Complex(0.1, 0.2));
}

TEST_CASE("malformed sequence files") {
  CHECK_THROWS_AS(parse_sequence_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_sequence_file("{}"), ParseError);
  CHECK_THROWS_AS(
      parse_sequence_file(R"({"points": [], "generator": {}})"), ParseError);
  CHECK_THROWS_AS(parse_sequence_file(R"({"points": [{"im": 1}]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_sequence_file(R"({"generator": {"sigma": 0.5}})"), ParseError);
  CHECK_THROWS_AS(load_sequence_file("/nonexistent/path.json"), ParseError);

  // a point on the circle parses but cannot realize; the index is named
  const std::string bad = R"({"points": [{"re": 0.1, "im": 0},
                                         {"re": 1.5, "im": 0}]})";
  try {
    parse_sequence_file(bad).realize();
    CHECK(false);
  } catch (const InvalidPoint& e) {
    CHECK(std::string(e.what()).find("point 2") != std::string::npos);
  }
}

TEST_CASE("report serialization is stable and escaped") {
  VerificationReport report;
  report.n = 1;
  report.delta_min = 1.0;
  report.cond_g = 1.0;
  report.warnings.push_back("quote \" and backslash \\");
  report.checks.push_back({"demo", CheckStatus::Pass, 0.25, "note", false});

  const std::string json = report_to_json(report);
  CHECK(json.find("\"quote \\\" and backslash \\\\\"") != std::string::npos);
  CHECK(json.find("\"passed\": true") != std::string::npos);
  CHECK(json.find("\"value\": 0.25") != std::string::npos);

  const std::string text = report_to_text(report);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("overall: PASS") != std::string::npos);
}
