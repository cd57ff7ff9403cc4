#include "halfdepth/reference_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace halfdepth {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDiskRadius = 2.0;
}  // namespace

Measure disk_with_atom_measure(const Rational& delta) {
  if (delta <= 0 || delta >= Rational(1, 2))
    throw std::invalid_argument("atom mass must lie in (0, 1/2)");
  std::vector<Component> comps;
  comps.emplace_back(UniformDisk{{0.0, 0.0}, kDiskRadius, 1.0});
  comps.emplace_back(DiracAtom{{1.0, 1.0}, delta});
  return Measure(std::move(comps));
}

Measure cauchy_cross_mu(int d) {
  if (d < 2) throw std::invalid_argument("cauchy_cross_mu needs d >= 2");
  std::vector<Component> comps;
  comps.emplace_back(CauchyProduct{d, {0.0, 0.0}, 1.0 / d});
  comps.emplace_back(DiracAtom{{0.0, 0.0}, Rational(d - 1, 2 * d)});
  return Measure(std::move(comps));
}

Measure cauchy_cross_nu(int d) {
  if (d < 2) throw std::invalid_argument("cauchy_cross_nu needs d >= 2");
  std::vector<Component> comps;
  comps.emplace_back(AxisCauchyMixture{d, 1.0});
  return Measure(std::move(comps));
}

double cauchy_cross_depth(const std::vector<double>& x, int d) {
  if (d < 1 || x.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("cauchy_cross_depth: coordinate count must equal d");
  double m = 0.0;
  bool origin = true;
  for (double xi : x) {
    m = std::max(m, std::abs(xi));
    if (xi != 0.0) origin = false;
  }
  if (origin) return 0.5;
  return (0.5 - std::atan(m) / kPi) / d;
}

double cauchy_cross_depth(const Point2& x) { return cauchy_cross_depth({x.x, x.y}, 2); }

DiskAtomModel::DiskAtomModel(double delta) : delta_(delta) {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("atom mass must lie in (0, 1/2)");
  alpha0_ = disk_depth(std::sqrt(2.0));
}

double DiskAtomModel::disk_depth(double r) const {
  const double R = kDiskRadius;
  if (r >= R) return 0.0;
  return (R * R * std::acos(r / R) - r * std::sqrt(R * R - r * r)) / (kPi * R * R);
}

double DiskAtomModel::disk_radius_of_level(double beta) const {
  if (!(beta > 0.0 && beta <= 0.5))
    throw std::invalid_argument("disk level must lie in (0, 1/2]");
  double lo = 0.0, hi = kDiskRadius;
  for (int i = 0; i < 80; ++i) {
    const double mid = (lo + hi) / 2;
    (disk_depth(mid) >= beta ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

int DiskAtomModel::case_band(double beta) const {
  if (beta <= alpha0_) return 1;
  if (beta <= alpha0_ + delta_) return 2;
  return 3;
}

bool DiskAtomModel::hull_contains(double rho, const Point2& p) const {
  // conv(B(0, rho) u {a}) for the atom a outside the disk.
  const Point2 a = atom();
  const double pr = std::hypot(p.x, p.y);
  if (rho >= 0.0 && pr <= rho) return true;
  const double L = std::hypot(a.x, a.y);
  if (L <= rho) return false;  // hull is the disk itself
  if (rho <= 0.0) {
    // Degenerate hull: the segment [0, a].
    const double t = (p.x * a.x + p.y * a.y) / (L * L);
    if (t < 0.0 || t > 1.0) return false;
    return std::abs(p.x * a.y - p.y * a.x) <= 1e-15 * L;
  }
  // Tangent points from a to the circle of radius rho.
  const double k = rho * rho / (L * L);
  const double s = rho * std::sqrt(L * L - rho * rho) / (L * L);
  const Point2 t1{k * a.x - s * a.y, k * a.y + s * a.x};
  const Point2 t2{k * a.x + s * a.y, k * a.y - s * a.x};
  auto cross = [](const Point2& o, const Point2& u, const Point2& v) {
    return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
  };
  // p inside triangle (a, t1, t2)?
  const double c1 = cross(a, t1, p);
  const double c2 = cross(t1, t2, p);
  const double c3 = cross(t2, a, p);
  return (c1 >= 0 && c2 >= 0 && c3 >= 0) || (c1 <= 0 && c2 <= 0 && c3 <= 0);
}

bool DiskAtomModel::region_contains(double beta, const Point2& p) const {
  if (beta <= 0.0) return true;
  if (beta > 0.5) return false;
  const double pr = std::hypot(p.x, p.y);
  if (case_band(beta) == 1) return pr <= disk_radius_of_level(beta);
  const double rho = disk_radius_of_level(beta);
  if (case_band(beta) == 2) return hull_contains(rho, p);
  return hull_contains(rho, p) && pr <= disk_radius_of_level(beta - delta_);
}

double DiskAtomModel::depth(const Point2& p) const {
  const double eps = 1e-13;
  if (!region_contains(eps, p)) return 0.0;
  double lo = eps, hi = 0.5;
  if (region_contains(hi, p)) return hi;
  for (int i = 0; i < 60; ++i) {
    const double mid = (lo + hi) / 2;
    (region_contains(mid, p) ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double DiskAtomModel::support(double beta, const Vec2& u) const {
  const Point2 a = atom();
  const int band = case_band(beta);
  const double r1 = disk_radius_of_level(beta);
  if (band == 1) return r1;
  const double ua = u.x * a.x + u.y * a.y;
  if (band == 2) return std::max(r1, ua);

  // Band 3: hull clipped by the disk of radius r2 > r1.
  const double r2 = disk_radius_of_level(beta - delta_);
  const double L = std::hypot(a.x, a.y);
  const double k = r1 * r1 / (L * L);
  const double s = r1 * std::sqrt(std::max(0.0, L * L - r1 * r1)) / (L * L);
  const Point2 t1{k * a.x - s * a.y, k * a.y + s * a.x};
  const Point2 t2{k * a.x + s * a.y, k * a.y - s * a.x};

  double best = r1;  // the inner disk is always inside the clip disk
  auto consider = [&](const Point2& p) { best = std::max(best, u.x * p.x + u.y * p.y); };
  consider(t1);
  consider(t2);
  if (L <= r2) consider(a);
  if (hull_contains(r1, {r2 * u.x, r2 * u.y})) best = std::max(best, r2);
  // Crossings of each tangent segment with the clip circle.
  for (const Point2& t : {t1, t2}) {
    const double dx = a.x - t.x, dy = a.y - t.y;
    const double A = dx * dx + dy * dy;
    const double B = 2 * (t.x * dx + t.y * dy);
    const double C = t.x * t.x + t.y * t.y - r2 * r2;
    const double disc = B * B - 4 * A * C;
    if (disc < 0.0 || A == 0.0) continue;
    for (double sgn : {-1.0, 1.0}) {
      const double tt = (-B + sgn * std::sqrt(disc)) / (2 * A);
      if (tt >= 0.0 && tt <= 1.0) consider({t.x + tt * dx, t.y + tt * dy});
    }
  }
  return best;
}

}  // namespace halfdepth
