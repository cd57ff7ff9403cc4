#include "halfdepth/measure_json.hpp"

#include <doctest.h>

using namespace halfdepth;

namespace {

const char* kSample = R"({
  "components": [
    {"type": "uniform_disk", "center": [0, 0], "radius": 2, "weight": 1.0},
    {"type": "dirac", "location": [1, 1], "weight": "1/10"},
    {"type": "finite_atomic", "weight": "2", "atoms": [
      {"point": [0, 0], "weight": "1/3"},
      {"point": [1, 0], "weight": 2}
    ]},
    {"type": "cauchy_product", "d": 2, "center": [0, 0], "weight": 0.5},
    {"type": "axis_cauchy", "d": 2, "weight": 1.0}
  ]
})";

}  // namespace

TEST_CASE("parse a full spec") {
  const Measure m = parse_measure_spec(kSample);
  CHECK(m.components().size() == 5);
  CHECK(m.atoms().size() == 3);
  // component weight 2 scales the atom weights
  CHECK(point_mass(m, {0, 0}) == Rational(2, 3));
  CHECK(point_mass(m, {1, 0}) == Rational(4));
  CHECK(point_mass(m, {1, 1}) == Rational(1, 10));
}

TEST_CASE("rational weights round-trip exactly") {
  const Measure m = parse_measure_spec(kSample);
  const Measure again = parse_measure_spec(measure_to_json(m));
  REQUIRE(again.atoms().size() == m.atoms().size());
  for (std::size_t i = 0; i < m.atoms().size(); ++i) {
    CHECK(m.atoms()[i].position == again.atoms()[i].position);
    CHECK(m.atoms()[i].weight == again.atoms()[i].weight);
  }
  CHECK(measure_to_json(m) == measure_to_json(again));
  CHECK(spec_hash(m) == spec_hash(again));
}

TEST_CASE("unknown keys and types are rejected") {
  CHECK_THROWS_AS(parse_measure_spec(R"({"components": [{"type": "nope"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_measure_spec(
          R"({"components": [{"type": "uniform_disk", "radius": 1, "extra": 3}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_measure_spec(R"({"components": [], "more": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_measure_spec("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_measure_spec(R"({"no_components": []})"), std::invalid_argument);
}

TEST_CASE("invalid values are rejected") {
  CHECK_THROWS_AS(
      parse_measure_spec(R"({"components": [{"type": "uniform_disk", "radius": -2}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_measure_spec(R"({"components": [{"type": "dirac", "location": [0, 0], "weight": "0"}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_measure_spec(R"({"components": [{"type": "dirac", "location": [0], "weight": 1}]})"),
      std::invalid_argument);
}

TEST_CASE("spec hash is deterministic and sensitive") {
  const Measure a = parse_measure_spec(kSample);
  const Measure b = parse_measure_spec(R"({"components": [
    {"type": "dirac", "location": [1, 1], "weight": "1/10"}]})");
  CHECK(spec_hash(a) == spec_hash(a));
  CHECK(spec_hash(a) != spec_hash(b));
  CHECK(spec_hash(a).size() == 16);
}
