#pragma once

#include "halfdepth/regions.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace halfdepth {

/// Black-box depth access: the reconstruction input. Evaluations must be
/// deterministic. `eval_exact` is present for exact-rational oracles (purely
/// atomic measures) and enables the exact round-trip pipeline.
struct DepthOracle {
  std::function<double(const Point2&)> eval;
  std::function<bool(const Point2&, double)> below;  // sound "depth < alpha"
  std::function<Rational(const RatPoint&)> eval_exact;
  BBox bbox;
  std::optional<double> total_mass;

  bool exact() const { return static_cast<bool>(eval_exact); }

  /// Wraps the generic engine. Purely atomic measures get a fast filtered
  /// double evaluator plus the exact rational evaluator; mixtures get the
  /// flag minimizer. The measure is copied into the oracle.
  static DepthOracle from_measure(const Measure& m, std::optional<BBox> bbox = std::nullopt,
                                  const DepthOptions& opts = {});

  /// Wraps a closed-form depth function.
  static DepthOracle from_function(std::function<double(const Point2&)> fn, const BBox& bbox,
                                   std::optional<double> total_mass = std::nullopt);
};

// ---------------------------------------------------------------------------
// Support constraints: mass can live only on the closure of the union of
// central-region boundaries. The report emits those boundaries; it never
// claims equality (the bound can be far from tight).
// ---------------------------------------------------------------------------

struct Contour {
  double level = 0.0;
  std::vector<Point2> points;
};

std::vector<Contour> support_report(const DepthOracle& oracle, const std::vector<double>& levels,
                                    const MixtureRegionOptions& opts = {});

// ---------------------------------------------------------------------------
// Depth jumps along lines: just beyond a point x, seen from a deeper point z,
// the depth drops by at least mu({x}).
// ---------------------------------------------------------------------------

struct JumpOptions {
  double t0 = 0.05;
  double tol = 1e-7;  // agreement of successive halvings
  int max_halvings = 40;
};

struct JumpResult {
  double jump = 0.0;        // depth at x (or the inside limit) minus the beyond limit
  bool stabilized = false;  // two successive halvings agreed on both sides
  double depth_at_x = 0.0;
  double inside_limit = 0.0;  // limit approaching x from the z side
  double beyond_limit = 0.0;  // limit just past x away from z
};

/// Requires depth(z) > depth(x) for the certified reading. The inside limit
/// makes the estimate robust when `x` is known only approximately (the true
/// jump location within ~t0 of x on the z-ray).
JumpResult jump_along_line(const DepthOracle& oracle, const Point2& x, const Point2& z,
                           const JumpOptions& opts = {});

// ---------------------------------------------------------------------------
// Atom candidates and detection on general oracles.
// ---------------------------------------------------------------------------

struct AtomCandidate {
  Point2 location;
  double level = 0.0;         // depth at the candidate (top of the persistence interval)
  double level_lo = 0.0;      // persistence interval of the corner across levels
  double level_hi = 0.0;
  double mass_lower = 0.0;
  double mass_estimate = 0.0;
  bool jump_testable = false;  // a deeper reference point existed
  bool confident = false;      // persistent corner with a stabilized positive jump
};

struct MedianInfo {
  Point2 location;
  double level = 0.0;
  bool undecidable_by_jump = false;
  std::string note;
};

struct ReconstructionReport {
  std::vector<AtomCandidate> candidates;
  MedianInfo median;
  std::vector<Contour> contours;
  double verification_max_error = 0.0;
  std::size_t verification_points = 0;
  std::string verdict;  // "PASS", "FAIL", or "DETECT"
  std::optional<Point2> fail_witness;

  std::vector<AtomCandidate> confident_candidates() const;
};

struct DetectOptions {
  MixtureRegionOptions region;
  ExtremePointOptions corners;
  double cluster_radius = -1.0;  // < 0: 1e-4 * bbox diagonal
  int min_persistence = 3;
  JumpOptions jump;
  double mass_floor = -1.0;  // < 0: max(1e-3 * total mass, 10 * jump tol)
};

/// Scans central regions over the level grid, keeps corner-like extreme
/// points that persist at a fixed location across levels, and sizes each by
/// its depth jump from a deeper point. Candidates at the deepest region are
/// flagged undecidable: with no deeper point the jump test cannot certify or
/// refute an atom there.
ReconstructionReport detect_atoms(const DepthOracle& oracle, const std::vector<double>& levels,
                                  const DetectOptions& opts = {});

/// The halfspace bounded by the supporting line of a region face, oriented
/// away from the region, for a point x strictly beyond that face. Open
/// segments from x to face points then avoid the region, and the halfspace
/// touches it. Face i joins boundary vertex/sample i to i+1 (cyclic).
/// Throws std::invalid_argument when x does not lie strictly beyond the face.
Halfspace touching_halfspace_for_face(const CentralRegion& region, std::size_t face_index,
                                      const Point2& x);

// ---------------------------------------------------------------------------
// Exact round-trip reconstruction of finitely atomic measures.
// ---------------------------------------------------------------------------

struct ExactReconstructOptions {
  /// Probe lattice pitch (anchored at integer multiples). Must resolve atom
  /// spacing; atoms off the lattice are still found via corner snapping as
  /// long as their coordinates are simple rationals.
  Rational probe_step = Rational(1, 2);
  int region_directions = 192;
  int max_repair = 32;
  JumpOptions jump;
};

struct ExactReconstruction {
  bool pass = false;
  Measure measure;  // meaningful only when pass
  ReconstructionReport report;
};

/// Probes achieved levels on a lattice, extracts region vertices, snaps them
/// onto exact rational coordinates, sizes every vertex by exact depth-drop
/// scans, and verifies the result by exact depth agreement on the probe set
/// plus a fresh offset grid. Vertices that break verification are removed by
/// a witness-driven repair loop; the verdict is PASS only under exact
/// agreement everywhere. Requires oracle.exact().
ExactReconstruction reconstruct_finite_atomic(const DepthOracle& oracle,
                                              const ExactReconstructOptions& opts = {});

/// Report serialization (candidates, median flag, contour references,
/// verification statistics, verdict).
std::string reconstruction_report_to_json(const ReconstructionReport& report,
                                          const std::vector<std::string>& contour_files = {});

}  // namespace halfdepth
