#pragma once

#include "halfdepth/depth.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace halfdepth {

struct EmptyRegion {
  std::string diagnostic;
};

/// Exact convex central region of an atomic measure. Degenerate regions are
/// allowed: one vertex (a point) or two (a segment); otherwise vertices are
/// in counterclockwise order.
struct RegionPolygon {
  std::vector<Point2> vertices;
  std::vector<RatPoint> exact_vertices;
};

/// Certified radial approximation of a convex central region: for every
/// direction, depth(center + t_inner * dir) >= level was verified and
/// depth(center + t_outer * dir) < level was witnessed by a light flag.
struct ApproxConvexBody {
  Point2 center;
  std::vector<double> angles;  // ascending, in [0, 2*pi)
  std::vector<double> t_inner;
  std::vector<double> t_outer;
  double tol = 0.0;  // max over directions of (t_outer - t_inner)

  std::size_t size() const { return angles.size(); }
  Point2 sample(std::size_t i) const {
    return {center.x + t_inner[i] * std::cos(angles[i]),
            center.y + t_inner[i] * std::sin(angles[i])};
  }
};

struct CentralRegion {
  MassValue level;
  std::variant<EmptyRegion, RegionPolygon, ApproxConvexBody> shape;

  bool empty() const { return std::holds_alternative<EmptyRegion>(shape); }
  const RegionPolygon* polygon() const { return std::get_if<RegionPolygon>(&shape); }
  const ApproxConvexBody* approx() const { return std::get_if<ApproxConvexBody>(&shape); }
};

/// Exact membership test for (possibly degenerate) region polygons.
bool region_polygon_contains(const RegionPolygon& poly, const RatPoint& p);

/// The finite set of depth values an atomic measure attains anywhere in the
/// plane: depths at the atoms and at all pairwise intersection points of
/// lines through atom pairs, plus zero. Requires m.purely_atomic().
std::vector<Rational> achieved_levels(const Measure& m);

/// Exact central region of an atomic measure at level alpha > 0, built by
/// clipping with every candidate halfplane whose boundary passes through an
/// atom (normals from atom-pair differences, both perpendicular and aligned).
/// Every output vertex is verified by exact depth evaluation and each edge
/// midpoint is verified to fall below alpha just outside; an insufficient
/// candidate family therefore fails loudly (std::logic_error) instead of
/// returning a wrong polygon. Throws std::invalid_argument for alpha <= 0.
CentralRegion central_region_atomic(const Measure& m, const Rational& alpha);

struct MixtureRegionOptions {
  int directions = 256;
  double tol = 1e-6;
  std::optional<Point2> deep_hint;
  int coarse_grid = 9;
  /// Subdivide direction gaps whose boundary turning exceeds this (radians),
  /// concentrating samples at corners.
  bool adaptive = true;
  double adaptive_turn = 0.02;
  int max_extra_directions = 4096;
  DepthOptions depth;
};

/// Depth access used by the region scanner: `value` is the full evaluation,
/// `below` a sound one-sided test (true guarantees depth < alpha).
struct DepthProbe {
  std::function<double(const Point2&)> value;
  std::function<bool(const Point2&, double)> below;
};

DepthProbe probe_from_measure(const Measure& m, const DepthOptions& opts = {});

/// Radial bisection from an interior deep point along many directions.
/// Along each ray from a point of D_alpha the region is left exactly once
/// (convexity), so the bracket is certified. Returns EmptyRegion with a
/// diagnostic when no point of depth >= alpha is found on the coarse grid.
CentralRegion central_region_probe(const DepthProbe& probe, const BBox& bbox, double alpha,
                                   const MixtureRegionOptions& opts = {});

CentralRegion central_region_mixture(const Measure& m, const BBox& bbox, double alpha,
                                     const MixtureRegionOptions& opts = {});

struct ExtremePointOptions {
  /// Boundary turning (radians) above which a sample counts as corner-like.
  double corner_threshold = 0.1;
};

struct CornerCandidate {
  Point2 location;
  double turning = 0.0;
  double confidence_radius = 0.0;
};

/// Exact mode: the polygon vertices. Approximate mode: corner-like boundary
/// samples only; smooth boundaries (where every point is extreme but none is
/// vertex-like) yield an empty list.
std::vector<Point2> extreme_points(const CentralRegion& r, const ExtremePointOptions& opts = {});

std::vector<CornerCandidate> corner_candidates(const ApproxConvexBody& b,
                                               const ExtremePointOptions& opts = {});

struct NestingReport {
  bool ok = true;
  std::string violation;
};

/// Verifies D_{a2} is contained in D_{a1} for consecutive ascending levels.
NestingReport region_nesting_check(const Measure& m, std::vector<double> levels, const BBox& bbox,
                                   const MixtureRegionOptions& opts = {});

/// Exports. CSV: one "x,y" row per vertex/sample. JSON carries the level,
/// shape type, tolerance metadata and the provided provenance fields.
void write_region_csv(const CentralRegion& r, const std::string& path);
std::string region_to_json(const CentralRegion& r, const std::string& measure_hash);

}  // namespace halfdepth
