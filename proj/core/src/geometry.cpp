#include "halfdepth/geometry.hpp"

#include <cfloat>
#include <stdexcept>

namespace halfdepth {

bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

int sign(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

namespace {
constexpr double kFilterEps = 8.0 * DBL_EPSILON;
}  // namespace

int side_sign(const Vec2& u, const Point2& a, const Point2& x) {
  const double tx = u.x * (a.x - x.x);
  const double ty = u.y * (a.y - x.y);
  const double s = tx + ty;
  const double mag = std::abs(u.x) * (std::abs(a.x) + std::abs(x.x)) +
                     std::abs(u.y) * (std::abs(a.y) + std::abs(x.y));
  if (std::abs(s) > kFilterEps * mag) return s > 0 ? 1 : -1;
  const Rational exact = rat_vec(u).dot(RatPoint(a) - RatPoint(x));
  return sign(exact);
}

int offset_sign(const Vec2& u, const Point2& a, double c) {
  const double s = u.x * a.x + u.y * a.y - c;
  const double mag =
      std::abs(u.x) * std::abs(a.x) + std::abs(u.y) * std::abs(a.y) + std::abs(c);
  if (std::abs(s) > kFilterEps * mag) return s > 0 ? 1 : -1;
  const Rational exact = rational_from_double(u.x) * rational_from_double(a.x) +
                         rational_from_double(u.y) * rational_from_double(a.y) -
                         rational_from_double(c);
  return sign(exact);
}

int direction_half(const RatVec2& d) {
  if (d.is_zero()) throw std::invalid_argument("zero vector has no direction");
  if (d.y > 0) return 0;
  if (d.y == 0 && d.x > 0) return 0;
  return 1;
}

int compare_directions(const RatVec2& a, const RatVec2& b) {
  const int ha = direction_half(a), hb = direction_half(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  return sign(a.cross(b));
}

bool same_direction(const RatVec2& a, const RatVec2& b) { return compare_directions(a, b) == 0; }

Halfspace::Halfspace(const Vec2& normal, double offset) : normal_(normal), offset_(offset) {
  if (!std::isfinite(normal.x) || !std::isfinite(normal.y) || !std::isfinite(offset))
    throw std::invalid_argument("halfspace parameters must be finite");
  if (std::abs(normal.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("halfspace normal must be unit length");
}

Halfspace Halfspace::through(const Point2& x, const Vec2& direction) {
  const double n = direction.norm();
  if (!(n > 0) || !std::isfinite(n)) throw std::invalid_argument("degenerate normal direction");
  const Vec2 u{direction.x / n, direction.y / n};
  return Halfspace(u, u.dot({x.x, x.y}));
}

FlagHalfspace2D::FlagHalfspace2D(const Point2& center, const Vec2& plane_normal,
                                 const Vec2& ray_direction)
    : center_(center), plane_normal_(plane_normal), ray_direction_(ray_direction) {
  if (!is_finite(center)) throw std::invalid_argument("flag center must be finite");
  if (std::abs(plane_normal.norm() - 1.0) > 1e-12 || std::abs(ray_direction.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("flag vectors must be unit length");
  if (std::abs(plane_normal.dot(ray_direction)) > 1e-12)
    throw std::invalid_argument("flag ray must lie in the boundary line");
}

FlagHalfspace2D FlagHalfspace2D::make(const Point2& center, const Vec2& plane_normal,
                                      int ray_sign) {
  const double n = plane_normal.norm();
  if (!(n > 0) || !std::isfinite(n)) throw std::invalid_argument("degenerate normal direction");
  const Vec2 u{plane_normal.x / n, plane_normal.y / n};
  const Vec2 r = ray_sign >= 0 ? rot90(u) : -rot90(u);
  return FlagHalfspace2D(center, u, r);
}

Halfspace FlagHalfspace2D::closed_halfspace() const {
  return Halfspace(plane_normal_, plane_normal_.dot({center_.x, center_.y}));
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.dot(ab);
  if (len2 == 0.0) return (p - a).norm();
  double t = (p - a).dot(ab) / len2;
  t = std::max(0.0, std::min(1.0, t));
  const Point2 proj = a + ab * t;
  return (p - proj).norm();
}

bool line_intersection(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2,
                       Point2* out) {
  const Vec2 da = a2 - a1, db = b2 - b1;
  const double den = da.cross(db);
  const double scale = da.norm() * db.norm();
  if (!(std::abs(den) > 1e-12 * scale)) return false;
  const double t = (b1 - a1).cross(db) / den;
  *out = a1 + da * t;
  return true;
}

}  // namespace halfdepth
