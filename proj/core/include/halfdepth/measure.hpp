#pragma once

#include "halfdepth/geometry.hpp"
#include "halfdepth/mass.hpp"

#include <variant>
#include <vector>

namespace halfdepth {

struct Atom {
  Point2 position;
  Rational weight;  // strictly positive
};

/// Finitely many weighted atoms at pairwise distinct positions. Duplicate
/// positions are rejected at construction; callers merge explicitly.
struct FiniteAtomic {
  std::vector<Atom> atoms;
};

/// Uniform distribution of total mass `mass` on the disk B(center, radius).
struct UniformDisk {
  Point2 center;
  double radius{1.0};
  double mass{1.0};
};

/// Independent standard Cauchy marginals centered at `center`, total mass
/// `weight`. Mass evaluation is implemented for dim == 2 only; the closed
/// form in reference_measures.hpp covers general dim.
struct CauchyProduct {
  int dim{2};
  Point2 center;
  double weight{1.0};
};

/// Mass `weight` split evenly over the coordinate axes, standard Cauchy along
/// each axis. Mass evaluation requires dim == 2.
struct AxisCauchyMixture {
  int dim{2};
  double weight{1.0};
};

struct DiracAtom {
  Point2 location;
  Rational mass;
};

using Component =
    std::variant<FiniteAtomic, UniformDisk, CauchyProduct, AxisCauchyMixture, DiracAtom>;

/// A finite Borel measure on the plane, the sum of its components.
///
/// Construction validates: positive weights/radii, finite coordinates,
/// globally distinct atom positions, dim >= 1. An empty measure (total mass
/// zero) is allowed; every depth is then zero.
class Measure {
 public:
  Measure() = default;
  explicit Measure(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }

  bool purely_atomic() const { return purely_atomic_; }

  /// Flattened view of all point masses (FiniteAtomic entries and Diracs).
  const std::vector<Atom>& atoms() const { return atoms_; }

  MassValue total_mass() const;

  /// Smallest axis-aligned box that contains all atoms and disk components,
  /// padded; heavy-tailed components only widen it to at least [-pad, pad]^2.
  BBox default_bbox(double pad = 1.0) const;

 private:
  std::vector<Component> components_;
  std::vector<Atom> atoms_;
  bool purely_atomic_ = true;
};

// ---------------------------------------------------------------------------
// Mass evaluation. All operations are pure; Measure values may be shared
// across threads freely.
// ---------------------------------------------------------------------------

/// mu(H) for the closed halfspace H; boundary atoms included.
MassValue halfspace_mass(const Measure& m, const Halfspace& h);

/// mu(int H): strict inequality; boundary mass excluded.
MassValue open_halfspace_mass(const Measure& m, const Halfspace& h);

/// Mass carried by the infinite line through p with the given direction.
MassValue line_mass(const Measure& m, const Point2& p, const Vec2& direction);

/// Mass of the ray { origin + t*direction : t >= 0 } (t > 0 when open).
MassValue ray_mass(const Measure& m, const Point2& origin, const Vec2& direction, bool open);

/// mu(F) = open halfplane + open boundary ray + center point mass.
MassValue flag_mass(const Measure& m, const FlagHalfspace2D& f);

/// mu({x}); exact rational (zero for continuous components).
Rational point_mass(const Measure& m, const Point2& x);

// ---------------------------------------------------------------------------
// Exact kernels on the flattened atom list. These take exact query data and
// never touch floating point; the depth sweep and the tests build on them.
// ---------------------------------------------------------------------------
namespace exact {

Rational atoms_halfplane_mass(const std::vector<Atom>& atoms, const RatPoint& x,
                              const RatVec2& normal, bool open);

/// Flag mass: atoms at x + open halfplane + boundary atoms on the open ray.
Rational atoms_flag_mass(const std::vector<Atom>& atoms, const RatPoint& x, const RatVec2& normal,
                         const RatVec2& ray);

Rational atoms_point_mass(const std::vector<Atom>& atoms, const RatPoint& x);

}  // namespace exact

}  // namespace halfdepth
