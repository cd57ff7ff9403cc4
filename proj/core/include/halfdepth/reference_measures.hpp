#pragma once

#include "halfdepth/measure.hpp"

#include <vector>

namespace halfdepth {

// ---------------------------------------------------------------------------
// Bundled reference measures. Both have fully analytic depth structure and
// serve as independent cross-checks of the generic engine; the CLI exposes
// them as `verify example1` (disk + atom) and `verify example2` (the two
// depth-indistinguishable Cauchy measures).
// ---------------------------------------------------------------------------

/// Uniform mass 1 on the disk B(0, 2) plus an atom of mass delta at (1, 1).
/// Requires delta in (0, 1/2).
Measure disk_with_atom_measure(const Rational& delta);

/// Independent standard Cauchy marginals with weight 1/d plus a Dirac atom of
/// mass 1/2 - 1/(2d) at the origin (total mass 1/2 + 1/(2d)); d == 2 for
/// engine evaluation.
Measure cauchy_cross_mu(int d = 2);

/// Probability measure on the coordinate axes, standard Cauchy along each
/// axis with weight 1/d. Has the same depth function as cauchy_cross_mu, yet
/// the two measures are mutually singular.
Measure cauchy_cross_nu(int d = 2);

/// Closed-form depth shared by cauchy_cross_mu and cauchy_cross_nu:
/// (1/d) * (1/2 - arctan(max_i |x_i|) / pi) away from the origin, 1/2 at it.
double cauchy_cross_depth(const std::vector<double>& x, int d);
double cauchy_cross_depth(const Point2& x);

// ---------------------------------------------------------------------------
// Analytic model of the disk-with-atom measure. Central regions fall into
// three bands as the level beta grows past the disk depth of the atom
// location (alpha0) and then past alpha0 + delta:
//
//   band 1  beta <= alpha0:          the disk-only region (a centred disk)
//   band 2  beta <= alpha0 + delta:  convex hull of that disk and the atom
//   band 3  beta >  alpha0 + delta:  the hull clipped by the larger disk
//                                    of level beta - delta
//
// Everything below is derived from the circular-segment area formula alone,
// so it is independent of the flag minimizer it is used to check.
// ---------------------------------------------------------------------------

class DiskAtomModel {
 public:
  explicit DiskAtomModel(double delta = 0.1);

  double delta() const { return delta_; }
  /// Depth of the disk-only part at the atom location: (pi - 2) / (4 pi).
  double atom_level() const { return alpha0_; }
  /// Largest depth value attained by the mixed measure (1/2).
  double max_level() const { return 0.5; }
  Point2 atom() const { return {1.0, 1.0}; }

  /// Fraction of the disk on the far side of a chord at distance r >= 0.
  double disk_depth(double r) const;
  /// Radius of the disk-only central region at level beta in (0, 1/2].
  double disk_radius_of_level(double beta) const;

  int case_band(double beta) const;
  bool region_contains(double beta, const Point2& p) const;

  /// sup { beta : p in D_beta }, by bisection over the nested regions.
  double depth(const Point2& p) const;

  /// Support function h(u) = max { <u, x> : x in D_beta } for unit u.
  double support(double beta, const Vec2& u) const;

 private:
  bool hull_contains(double rho, const Point2& p) const;

  double delta_;
  double alpha0_;
};

}  // namespace halfdepth
