#pragma once

#include "halfdepth/measure.hpp"

#include <optional>

namespace halfdepth {

/// Result of a depth query. The reported value is always an attained minimum
/// over flag halfspaces; `attained` records whether a closed halfspace with
/// the witness normal achieves the same mass (it may not, a flag can dip
/// below every closed halfspace).
struct DepthValue {
  MassValue value;
  bool attained = true;
  std::optional<FlagHalfspace2D> witness;
};

struct DepthOptions {
  /// Coarse angular resolution of the mixture minimizer.
  int coarse_angles = 2048;
  /// Target width of the refined normal-angle bracket.
  double theta_tol = 1e-10;
  bool refine = true;
};

/// Exact depth of a purely atomic measure via the rotating sweep
/// (O(n log n) in the number of atoms). Throws unless m.purely_atomic().
DepthValue depth_atomic(const Measure& m, const Point2& x);
DepthValue depth_atomic(const Measure& m, const RatPoint& x);

/// Minimum flag-halfspace mass at x. Exact critical-normal enumeration for
/// atomic measures; angular scan + golden-section refinement for mixtures
/// (absolute accuracy target 1e-9 for the bundled closed-form components).
DepthValue depth_flag(const Measure& m, const Point2& x, const DepthOptions& opts = {});

/// Halfspace depth: dispatches to the exact sweep when purely atomic, else
/// to the flag minimizer. Both agree with the closed-halfspace infimum.
DepthValue depth(const Measure& m, const Point2& x, const DepthOptions& opts = {});

/// True guarantees depth(m, x) < alpha (some evaluated flag is lighter).
/// False means no sampled candidate dipped below alpha; for atomic measures
/// this direction is exact as well.
bool depth_below(const Measure& m, const Point2& x, double alpha, const DepthOptions& opts = {});

namespace exact {

/// Rotating-sweep depth on a flattened atom list at an exact query point.
/// Optionally reports an interval-interior witness normal (exact direction,
/// boundary-free: no atom other than those at x lies on its boundary line).
Rational atomic_depth(const std::vector<Atom>& atoms, const RatPoint& x,
                      RatVec2* witness_normal = nullptr);

/// Same value via critical-normal flag enumeration (both boundary rays at
/// every normal perpendicular or parallel to an atom direction).
Rational atomic_flag_depth(const std::vector<Atom>& atoms, const RatPoint& x,
                           RatVec2* witness_normal = nullptr, RatVec2* witness_ray = nullptr);

}  // namespace exact

}  // namespace halfdepth
