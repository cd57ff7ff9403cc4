#pragma once

#include "halfdepth/depth.hpp"
#include "halfdepth/measure.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace halfdepth {

// ---------------------------------------------------------------------------
// Reference implementations used to validate the closed forms and the fast
// sweep. Deliberately simple and kept independent of the paths they check.
// ---------------------------------------------------------------------------

/// Exact brute-force depth of a flattened atom list: enumerates every
/// halfplane bounded by a line through x and an atom (both closed sides and
/// all four open-side-plus-ray flag variants). This finite family exhausts
/// all distinct flag masses.
Rational brute_force_depth_atomic(const std::vector<Atom>& atoms, const RatPoint& x);
Rational brute_force_depth_atomic(const Measure& m, const Point2& x);

// ---------------------------------------------------------------------------
// Monte Carlo mass integration.
//
// Reproducible by construction: sample i draws from a splitmix64 stream
// seeded with seed ^ (i * 0x9e3779b97f4a7c15), so any parallel evaluation
// order yields bit-identical estimates.
// ---------------------------------------------------------------------------

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

using MassRegion = std::variant<Halfspace, FlagHalfspace2D>;

/// Unbiased estimate of the component's mass inside the region. Supported
/// components: uniform_disk (direct), cauchy_product (inverse CDF per
/// coordinate), axis_cauchy (axis index, then 1-D inverse CDF). Atomic
/// components are rejected; their masses are exact by definition.
MonteCarloEstimate monte_carlo_mass(const Component& c, const MassRegion& region, std::uint64_t n,
                                    std::uint64_t seed);

// ---------------------------------------------------------------------------
// Dense depth fields (the data behind depth contour plots).
// ---------------------------------------------------------------------------

struct DepthField {
  BBox bbox;
  int nx = 0;
  int ny = 0;
  /// Row-major, rows scan y from bbox.lo.y to bbox.hi.y, columns scan x.
  std::vector<double> values;
  std::string measure_hash;
  std::uint64_t seed = 0;

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
  Point2 node(int ix, int iy) const;
};

/// Evaluates depth at every grid node (resolution >= 2x2). Deterministic and
/// invariant under evaluation order; nodes are processed in parallel.
DepthField depth_field(const Measure& m, const BBox& bbox, int nx, int ny,
                       const DepthOptions& opts = {});

void write_depth_field_csv(const DepthField& f, const std::string& path);
std::string depth_field_sidecar(const DepthField& f);

// ---------------------------------------------------------------------------
// The RNG itself, exposed for tests and samplers that need the documented
// per-index stream assignment.
// ---------------------------------------------------------------------------

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in the open interval (0, 1).
  double next_open01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
};

/// Stream for sample index i under the given seed.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (index * 0x9e3779b97f4a7c15ull));
}

}  // namespace halfdepth
