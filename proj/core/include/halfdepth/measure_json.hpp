#pragma once

#include "halfdepth/measure.hpp"

#include <string>

namespace halfdepth {

/// Parses a measure-spec JSON document:
///
///   {"components": [
///     {"type": "finite_atomic", "weight": "1",
///      "atoms": [{"point": [0, 0], "weight": "1/2"}, ...]},
///     {"type": "uniform_disk", "center": [0, 0], "radius": 2, "weight": 1.0},
///     {"type": "cauchy_product", "d": 2, "center": [0, 0], "weight": 0.5},
///     {"type": "axis_cauchy", "d": 2, "weight": 1.0},
///     {"type": "dirac", "location": [1, 1], "weight": "1/10"}
///   ]}
///
/// Atomic weights ("finite_atomic" atoms, the component-level "finite_atomic"
/// weight, and "dirac" weights) accept "p/q" strings or numbers and are kept
/// exact; rational values survive a serialize/parse round trip unchanged.
/// Unknown component types and unknown keys are rejected.
Measure parse_measure_spec(const std::string& json_text);

Measure load_measure_spec(const std::string& path);

/// Canonical serialization (used for hashing and round trips).
std::string measure_to_json(const Measure& m);

/// FNV-1a 64-bit hash of the canonical serialization, as fixed-width hex.
std::string spec_hash(const Measure& m);

}  // namespace halfdepth
