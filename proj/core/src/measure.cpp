#include "halfdepth/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace halfdepth {

namespace {

constexpr double kPi = std::numbers::pi;

// Direction components within this tolerance of zero are treated as exact
// zeros for axis-parallel tests on normalized double input.
constexpr double kAxisTol = 1e-12;

/// Fraction of the unit-mass disk B(0, R) lying in { <u, y - center> >= t }.
double disk_segment_fraction(double t, double R) {
  if (t <= -R) return 1.0;
  if (t >= R) return 0.0;
  const double seg = R * R * std::acos(t / R) - t * std::sqrt(R * R - t * t);
  return seg / (kPi * R * R);
}

double cauchy_tail(double z) { return 0.5 - std::atan(z) / kPi; }
double cauchy_cdf(double z) { return 0.5 + std::atan(z) / kPi; }

void require_dim2(int dim, const char* what) {
  if (dim != 2) throw std::invalid_argument(std::string(what) + ": mass evaluation needs dim == 2");
}

/// Closed/open halfspace mass of one component.
MassValue component_halfspace_mass(const Component& comp, const Vec2& u, double c, bool open) {
  if (const auto* fa = std::get_if<FiniteAtomic>(&comp)) {
    Rational sum = 0;
    for (const Atom& a : fa->atoms) {
      const int s = offset_sign(u, a.position, c);
      if (s > 0 || (!open && s == 0)) sum += a.weight;
    }
    return MassValue::exact(sum);
  }
  if (const auto* da = std::get_if<DiracAtom>(&comp)) {
    const int s = offset_sign(u, da->location, c);
    if (s > 0 || (!open && s == 0)) return MassValue::exact(da->mass);
    return MassValue::exact(0);
  }
  if (const auto* disk = std::get_if<UniformDisk>(&comp)) {
    const double t = c - u.dot({disk->center.x, disk->center.y});
    if (t >= disk->radius) return MassValue::exact(0);
    return MassValue::approx(disk->mass * disk_segment_fraction(t, disk->radius));
  }
  if (const auto* cp = std::get_if<CauchyProduct>(&comp)) {
    require_dim2(cp->dim, "cauchy_product");
    // <u, X> is Cauchy with scale |u_1| + |u_2| around <u, center>.
    const double scale = std::abs(u.x) + std::abs(u.y);
    const double z = (c - u.dot({cp->center.x, cp->center.y})) / scale;
    return MassValue::approx(cp->weight * cauchy_tail(z));
  }
  const auto& ax = std::get<AxisCauchyMixture>(comp);
  require_dim2(ax.dim, "axis_cauchy");
  const double per_axis = ax.weight / ax.dim;
  double total = 0.0;
  bool all_zero = true;
  const double uc[2] = {u.x, u.y};
  for (int i = 0; i < 2; ++i) {
    const double ui = uc[i];
    if (std::abs(ui) <= kAxisTol) {
      // Axis parallel to the boundary: all-or-nothing.
      const bool in = open ? (c < 0.0) : (c <= 0.0);
      if (in) {
        total += per_axis;
        all_zero = false;
      }
    } else if (ui > 0) {
      total += per_axis * cauchy_tail(c / ui);
      all_zero = false;
    } else {
      total += per_axis * cauchy_cdf(c / ui);
      all_zero = false;
    }
  }
  if (all_zero) return MassValue::exact(0);
  return MassValue::approx(total);
}

bool direction_parallel_to_axis(const Vec2& d, int axis) {
  return axis == 0 ? std::abs(d.y) <= kAxisTol : std::abs(d.x) <= kAxisTol;
}

}  // namespace

Measure::Measure(std::vector<Component> components) : components_(std::move(components)) {
  for (const Component& comp : components_) {
    if (const auto* fa = std::get_if<FiniteAtomic>(&comp)) {
      for (const Atom& a : fa->atoms) {
        if (!is_finite(a.position)) throw std::invalid_argument("atom position must be finite");
        if (a.weight <= 0) throw std::invalid_argument("atom weight must be positive");
        atoms_.push_back(a);
      }
    } else if (const auto* da = std::get_if<DiracAtom>(&comp)) {
      if (!is_finite(da->location)) throw std::invalid_argument("dirac location must be finite");
      if (da->mass <= 0) throw std::invalid_argument("dirac mass must be positive");
      atoms_.push_back({da->location, da->mass});
    } else if (const auto* disk = std::get_if<UniformDisk>(&comp)) {
      if (!is_finite(disk->center) || !std::isfinite(disk->radius))
        throw std::invalid_argument("disk parameters must be finite");
      if (disk->radius <= 0) throw std::invalid_argument("disk radius must be positive");
      if (disk->mass <= 0) throw std::invalid_argument("disk mass must be positive");
      purely_atomic_ = false;
    } else if (const auto* cp = std::get_if<CauchyProduct>(&comp)) {
      if (cp->dim < 1) throw std::invalid_argument("cauchy_product dim must be >= 1");
      if (!is_finite(cp->center)) throw std::invalid_argument("cauchy center must be finite");
      if (cp->weight <= 0) throw std::invalid_argument("cauchy weight must be positive");
      purely_atomic_ = false;
    } else {
      const auto& ax = std::get<AxisCauchyMixture>(comp);
      if (ax.dim < 1) throw std::invalid_argument("axis_cauchy dim must be >= 1");
      if (ax.weight <= 0) throw std::invalid_argument("axis_cauchy weight must be positive");
      purely_atomic_ = false;
    }
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i].position == atoms_[j].position)
        throw std::invalid_argument("coincident atoms are rejected; merge weights explicitly");
}

MassValue Measure::total_mass() const {
  MassValue total = MassValue::exact(0);
  for (const Component& comp : components_) {
    if (const auto* fa = std::get_if<FiniteAtomic>(&comp)) {
      Rational s = 0;
      for (const Atom& a : fa->atoms) s += a.weight;
      total += MassValue::exact(s);
    } else if (const auto* da = std::get_if<DiracAtom>(&comp)) {
      total += MassValue::exact(da->mass);
    } else if (const auto* disk = std::get_if<UniformDisk>(&comp)) {
      total += MassValue::approx(disk->mass);
    } else if (const auto* cp = std::get_if<CauchyProduct>(&comp)) {
      total += MassValue::approx(cp->weight);
    } else {
      total += MassValue::approx(std::get<AxisCauchyMixture>(comp).weight);
    }
  }
  return total;
}

BBox Measure::default_bbox(double pad) const {
  double lo_x = -pad, lo_y = -pad, hi_x = pad, hi_y = pad;
  auto grow = [&](double x, double y) {
    lo_x = std::min(lo_x, x);
    lo_y = std::min(lo_y, y);
    hi_x = std::max(hi_x, x);
    hi_y = std::max(hi_y, y);
  };
  for (const Atom& a : atoms_) grow(a.position.x, a.position.y);
  for (const Component& comp : components_) {
    if (const auto* disk = std::get_if<UniformDisk>(&comp)) {
      grow(disk->center.x - disk->radius, disk->center.y - disk->radius);
      grow(disk->center.x + disk->radius, disk->center.y + disk->radius);
    } else if (std::holds_alternative<CauchyProduct>(comp) ||
               std::holds_alternative<AxisCauchyMixture>(comp)) {
      grow(-5.0, -5.0);
      grow(5.0, 5.0);
    }
  }
  return BBox{{lo_x - pad, lo_y - pad}, {hi_x + pad, hi_y + pad}};
}

MassValue halfspace_mass(const Measure& m, const Halfspace& h) {
  MassValue total = MassValue::exact(0);
  for (const Component& comp : m.components())
    total += component_halfspace_mass(comp, h.normal(), h.offset(), /*open=*/false);
  return total;
}

MassValue open_halfspace_mass(const Measure& m, const Halfspace& h) {
  MassValue total = MassValue::exact(0);
  for (const Component& comp : m.components())
    total += component_halfspace_mass(comp, h.normal(), h.offset(), /*open=*/true);
  return total;
}

MassValue line_mass(const Measure& m, const Point2& p, const Vec2& direction) {
  const double n = direction.norm();
  if (!(std::abs(n - 1.0) <= 1e-12)) throw std::invalid_argument("line direction must be unit");
  MassValue total = MassValue::exact(0);
  const Vec2 perp = rot90(direction);
  Rational atom_sum = 0;
  for (const Atom& a : m.atoms())
    if (side_sign(perp, a.position, p) == 0) atom_sum += a.weight;
  total += MassValue::exact(atom_sum);
  for (const Component& comp : m.components()) {
    if (const auto* ax = std::get_if<AxisCauchyMixture>(&comp)) {
      require_dim2(ax->dim, "axis_cauchy");
      // The line carries axis mass only when it coincides with an axis.
      if (direction_parallel_to_axis(direction, 0) && p.y == 0.0)
        total += MassValue::approx(ax->weight / ax->dim);
      if (direction_parallel_to_axis(direction, 1) && p.x == 0.0)
        total += MassValue::approx(ax->weight / ax->dim);
    }
  }
  return total;
}

MassValue ray_mass(const Measure& m, const Point2& origin, const Vec2& direction, bool open) {
  const double n = direction.norm();
  if (!(std::abs(n - 1.0) <= 1e-12)) throw std::invalid_argument("ray direction must be unit");
  MassValue total = MassValue::exact(0);
  const Vec2 perp = rot90(direction);
  Rational atom_sum = 0;
  for (const Atom& a : m.atoms()) {
    if (side_sign(perp, a.position, origin) != 0) continue;
    const int t = side_sign(direction, a.position, origin);
    if (t > 0 || (!open && t == 0)) atom_sum += a.weight;
  }
  total += MassValue::exact(atom_sum);
  for (const Component& comp : m.components()) {
    if (const auto* ax = std::get_if<AxisCauchyMixture>(&comp)) {
      require_dim2(ax->dim, "axis_cauchy");
      const double per_axis = ax->weight / ax->dim;
      if (direction_parallel_to_axis(direction, 0) && origin.y == 0.0) {
        total += MassValue::approx(per_axis * (direction.x > 0 ? cauchy_tail(origin.x)
                                                               : cauchy_cdf(origin.x)));
      } else if (direction_parallel_to_axis(direction, 1) && origin.x == 0.0) {
        total += MassValue::approx(per_axis * (direction.y > 0 ? cauchy_tail(origin.y)
                                                               : cauchy_cdf(origin.y)));
      }
    }
  }
  return total;
}

MassValue flag_mass(const Measure& m, const FlagHalfspace2D& f) {
  const Halfspace plane = f.closed_halfspace();
  MassValue total = open_halfspace_mass(m, plane);
  total += ray_mass(m, f.center(), f.ray_direction(), /*open=*/true);
  total += MassValue::exact(point_mass(m, f.center()));
  return total;
}

Rational point_mass(const Measure& m, const Point2& x) {
  Rational sum = 0;
  for (const Atom& a : m.atoms())
    if (a.position == x) sum += a.weight;
  return sum;
}

namespace exact {

Rational atoms_halfplane_mass(const std::vector<Atom>& atoms, const RatPoint& x,
                              const RatVec2& normal, bool open) {
  Rational sum = 0;
  for (const Atom& a : atoms) {
    const int s = sign(normal.dot(RatPoint(a.position) - x));
    if (s > 0 || (!open && s == 0)) sum += a.weight;
  }
  return sum;
}

Rational atoms_flag_mass(const std::vector<Atom>& atoms, const RatPoint& x, const RatVec2& normal,
                         const RatVec2& ray) {
  Rational sum = 0;
  for (const Atom& a : atoms) {
    const RatVec2 d = RatPoint(a.position) - x;
    if (d.is_zero()) {
      sum += a.weight;
      continue;
    }
    const int s = sign(normal.dot(d));
    if (s > 0 || (s == 0 && sign(ray.dot(d)) > 0)) sum += a.weight;
  }
  return sum;
}

Rational atoms_point_mass(const std::vector<Atom>& atoms, const RatPoint& x) {
  Rational sum = 0;
  for (const Atom& a : atoms)
    if (RatPoint(a.position) == x) sum += a.weight;
  return sum;
}

}  // namespace exact

}  // namespace halfdepth
