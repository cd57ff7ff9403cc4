#pragma once

#include "halfdepth/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace halfdepth {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
  constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
  constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
  double norm() const { return std::hypot(x, y); }
};

/// Counterclockwise quarter turn.
constexpr Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }

struct Point2 {
  double x{0.0};
  double y{0.0};

  constexpr Point2() = default;
  constexpr Point2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator-(const Point2& r) const { return {x - r.x, y - r.y}; }
  constexpr Point2 operator+(const Vec2& v) const { return {x + v.x, y + v.y}; }
  constexpr bool operator==(const Point2& r) const { return x == r.x && y == r.y; }
};

bool is_finite(const Point2& p);

struct BBox {
  Point2 lo;
  Point2 hi;

  bool valid() const { return lo.x < hi.x && lo.y < hi.y; }
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double diagonal() const { return std::hypot(width(), height()); }
  Point2 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }
  bool contains(const Point2& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  BBox padded(double pad) const { return {{lo.x - pad, lo.y - pad}, {hi.x + pad, hi.y + pad}}; }
};

// ---------------------------------------------------------------------------
// Exact counterparts. Coordinates of incoming doubles convert losslessly, so
// every predicate below is decided in exact arithmetic when it matters.
// ---------------------------------------------------------------------------

struct RatVec2 {
  Rational x;
  Rational y;

  RatVec2() = default;
  RatVec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

  RatVec2 operator+(const RatVec2& r) const { return {x + r.x, y + r.y}; }
  RatVec2 operator-(const RatVec2& r) const { return {x - r.x, y - r.y}; }
  RatVec2 operator-() const { return {-x, -y}; }
  Rational dot(const RatVec2& r) const { return x * r.x + y * r.y; }
  Rational cross(const RatVec2& r) const { return x * r.y - y * r.x; }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline RatVec2 rat_rot90(const RatVec2& v) { return {-v.y, v.x}; }

struct RatPoint {
  Rational x;
  Rational y;

  RatPoint() = default;
  RatPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit RatPoint(const Point2& p)
      : x(rational_from_double(p.x)), y(rational_from_double(p.y)) {}

  RatVec2 operator-(const RatPoint& r) const { return {x - r.x, y - r.y}; }
  RatPoint operator+(const RatVec2& v) const { return {x + v.x, y + v.y}; }
  bool operator==(const RatPoint& r) const { return x == r.x && y == r.y; }
  Point2 to_point() const { return {rational_to_double(x), rational_to_double(y)}; }
};

inline RatVec2 rat_vec(const Vec2& v) {
  return {rational_from_double(v.x), rational_from_double(v.y)};
}

int sign(const Rational& q);

/// Sign of <u, a - x> computed in doubles with a forward error filter;
/// falls back to exact arithmetic only when the result is too close to call.
int side_sign(const Vec2& u, const Point2& a, const Point2& x);

/// Sign of <u, a> - c with the same filter + exact fallback.
int offset_sign(const Vec2& u, const Point2& a, double c);

// ---------------------------------------------------------------------------
// Cyclic order on exact directions, counterclockwise starting at (1, 0).
// ---------------------------------------------------------------------------

/// 0 for angles in [0, pi), 1 for [pi, 2*pi). Zero vectors are invalid.
int direction_half(const RatVec2& d);

/// -1 / 0 / +1 when a precedes / equals (up to positive scale) / follows b.
int compare_directions(const RatVec2& a, const RatVec2& b);

bool same_direction(const RatVec2& a, const RatVec2& b);

// ---------------------------------------------------------------------------
// Halfspaces
// ---------------------------------------------------------------------------

/// Closed halfplane { y : <normal, y> >= offset } with a unit inner normal.
class Halfspace {
 public:
  Halfspace(const Vec2& normal, double offset);

  /// Halfplane whose boundary passes through x; direction need not be unit.
  static Halfspace through(const Point2& x, const Vec2& direction);

  const Vec2& normal() const { return normal_; }
  double offset() const { return offset_; }

  /// Closed complement: { y : <-normal, y> >= -offset } shares the boundary.
  Halfspace complement() const { return Halfspace(-normal_, -offset_); }

  bool contains(const Point2& p) const { return offset_sign(normal_, p, offset_) >= 0; }
  bool contains_strictly(const Point2& p) const { return offset_sign(normal_, p, offset_) > 0; }
  bool boundary_contains(const Point2& p) const { return offset_sign(normal_, p, offset_) == 0; }

 private:
  Vec2 normal_;
  double offset_;
};

/// Planar flag halfspace: the center point, an open ray inside the boundary
/// line, and the open halfplane { y : <plane_normal, y - center> > 0 }.
class FlagHalfspace2D {
 public:
  FlagHalfspace2D(const Point2& center, const Vec2& plane_normal, const Vec2& ray_direction);

  /// ray_sign = +1 picks rot90(normal) as the ray, -1 the opposite ray.
  static FlagHalfspace2D make(const Point2& center, const Vec2& plane_normal, int ray_sign);

  const Point2& center() const { return center_; }
  const Vec2& plane_normal() const { return plane_normal_; }
  const Vec2& ray_direction() const { return ray_direction_; }

  /// Closed halfspace with the same boundary line (used for attainment tests).
  Halfspace closed_halfspace() const;

 private:
  Point2 center_;
  Vec2 plane_normal_;
  Vec2 ray_direction_;
};

// ---------------------------------------------------------------------------
// Small helpers shared by the region/reconstruction code.
// ---------------------------------------------------------------------------

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b);

/// Intersection of the (infinite) lines through (a1,a2) and (b1,b2).
/// Returns false when the directions are (nearly) parallel.
bool line_intersection(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2,
                       Point2* out);

}  // namespace halfdepth
