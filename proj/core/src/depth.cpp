#include "halfdepth/depth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace halfdepth {

namespace {

constexpr double kPi = std::numbers::pi;

struct DirGroup {
  RatVec2 dir;
  Rational weight;
};

struct DirLess {
  bool operator()(const RatVec2& a, const RatVec2& b) const {
    return compare_directions(a, b) < 0;
  }
};

/// Representative direction strictly inside the CCW interval (a, b).
/// Gaps never exceed pi because event normals come in antipodal pairs.
RatVec2 interval_rep(const RatVec2& a, const RatVec2& b) {
  if (same_direction(a, -b)) return rat_rot90(a);
  return a + b;
}

Vec2 normalized(const Vec2& v) {
  const double n = v.norm();
  return {v.x / n, v.y / n};
}

Vec2 to_unit(const RatVec2& v) {
  return normalized({rational_to_double(v.x), rational_to_double(v.y)});
}

}  // namespace

namespace exact {

Rational atomic_depth(const std::vector<Atom>& atoms, const RatPoint& x,
                      RatVec2* witness_normal) {
  Rational w_at = 0;
  std::map<RatVec2, Rational, DirLess> groups;
  for (const Atom& a : atoms) {
    RatVec2 d = RatPoint(a.position) - x;
    if (d.is_zero()) {
      w_at += a.weight;
      continue;
    }
    groups[d] += a.weight;
  }
  if (groups.empty()) {
    if (witness_normal) *witness_normal = RatVec2(Rational(1), Rational(0));
    return w_at;
  }

  // Event normals: the atom enters the open halfplane when the inner normal
  // passes rot(-90)(d) and leaves just after rot(+90)(d).
  struct Event {
    Rational enter;
    Rational exit;
  };
  std::map<RatVec2, Event, DirLess> events;
  for (const auto& [d, w] : groups) {
    events[RatVec2(d.y, -d.x)].enter += w;
    events[RatVec2(-d.y, d.x)].exit += w;
  }
  std::vector<RatVec2> normals;
  normals.reserve(events.size());
  for (const auto& [n, e] : events) normals.push_back(n);
  const std::size_t K = normals.size();

  // Open-halfplane weight on the first interval, then sweep incrementally.
  RatVec2 rep0 = interval_rep(normals[0], normals[1 % K]);
  Rational sum = 0;
  for (const auto& [d, w] : groups)
    if (sign(rep0.dot(d)) > 0) sum += w;

  Rational best = sum;
  RatVec2 best_rep = rep0;
  for (std::size_t k = 1; k < K; ++k) {
    const Event& ev = events.find(normals[k])->second;
    sum += ev.enter;
    sum -= ev.exit;
    if (sum < best) {
      best = sum;
      best_rep = interval_rep(normals[k], normals[(k + 1) % K]);
    }
  }
  if (witness_normal) *witness_normal = best_rep;
  return w_at + best;
}

Rational atomic_flag_depth(const std::vector<Atom>& atoms, const RatPoint& x,
                           RatVec2* witness_normal, RatVec2* witness_ray) {
  Rational w_at = 0;
  std::vector<DirGroup> dirs;
  for (const Atom& a : atoms) {
    RatVec2 d = RatPoint(a.position) - x;
    if (d.is_zero())
      w_at += a.weight;
    else
      dirs.push_back({std::move(d), a.weight});
  }
  if (dirs.empty()) {
    if (witness_normal) *witness_normal = RatVec2(Rational(1), Rational(0));
    if (witness_ray) *witness_ray = RatVec2(Rational(0), Rational(1));
    return w_at;
  }

  std::map<RatVec2, char, DirLess> candidates;
  for (const DirGroup& g : dirs) {
    candidates.emplace(rat_rot90(g.dir), 0);
    candidates.emplace(-rat_rot90(g.dir), 0);
    candidates.emplace(g.dir, 0);
    candidates.emplace(-g.dir, 0);
  }

  bool have = false;
  Rational best;
  RatVec2 best_n, best_r;
  for (const auto& [n, unused] : candidates) {
    (void)unused;
    Rational open_sum = 0, side_plus = 0, side_minus = 0;
    const RatVec2 r = rat_rot90(n);
    for (const DirGroup& g : dirs) {
      const int s = sign(n.dot(g.dir));
      if (s > 0) {
        open_sum += g.weight;
      } else if (s == 0) {
        if (sign(r.dot(g.dir)) > 0)
          side_plus += g.weight;
        else
          side_minus += g.weight;
      }
    }
    for (int ray_sign : {+1, -1}) {
      const Rational mass = open_sum + (ray_sign > 0 ? side_plus : side_minus);
      if (!have || mass < best) {
        have = true;
        best = mass;
        best_n = n;
        best_r = ray_sign > 0 ? r : -r;
      }
    }
  }
  if (witness_normal) *witness_normal = best_n;
  if (witness_ray) *witness_ray = best_r;
  return w_at + best;
}

}  // namespace exact

namespace {

DepthValue atomic_depth_value(const Measure& m, const RatPoint& x) {
  RatVec2 wn;
  const Rational value = exact::atomic_depth(m.atoms(), x, &wn);
  DepthValue out;
  out.value = MassValue::exact(value);
  out.attained = true;  // finitely atomic measures always have a minimizing halfspace
  const Point2 xp = x.to_point();
  out.witness = FlagHalfspace2D::make(xp, to_unit(wn), +1);
  return out;
}

// ---------------------------------------------------------------------------
// Mixture path: direct double-precision flag evaluation (exact tie handling
// for atoms via the filtered predicates).
// ---------------------------------------------------------------------------

constexpr double kAxisTol = 1e-12;

struct FlagParts {
  double open_part = 0.0;   // open halfplane
  double ray_plus = 0.0;    // boundary ray along +rot90(u)
  double ray_minus = 0.0;   // boundary ray along -rot90(u)
  double center = 0.0;      // mu({x})
  double value() const { return open_part + center + std::min(ray_plus, ray_minus); }
};

double cauchy_tail(double z) { return 0.5 - std::atan(z) / kPi; }
double cauchy_cdf(double z) { return 0.5 + std::atan(z) / kPi; }

FlagParts eval_flag_parts(const Measure& m, const Point2& x, const Vec2& u) {
  FlagParts out;
  const Vec2 r = rot90(u);
  const double c = u.dot({x.x, x.y});
  for (const Atom& a : m.atoms()) {
    const int s = side_sign(u, a.position, x);
    if (s > 0) {
      out.open_part += rational_to_double(a.weight);
    } else if (s == 0) {
      const int t = side_sign(r, a.position, x);
      const double w = rational_to_double(a.weight);
      if (t > 0)
        out.ray_plus += w;
      else if (t < 0)
        out.ray_minus += w;
      else
        out.center += w;
    }
  }
  for (const Component& comp : m.components()) {
    if (const auto* disk = std::get_if<UniformDisk>(&comp)) {
      const double t = c - u.dot({disk->center.x, disk->center.y});
      if (t < disk->radius) {
        const double seg =
            disk->radius * disk->radius * std::acos(std::max(-1.0, t / disk->radius)) -
            t * std::sqrt(std::max(0.0, disk->radius * disk->radius - t * t));
        out.open_part += disk->mass * seg / (kPi * disk->radius * disk->radius);
      }
    } else if (const auto* cp = std::get_if<CauchyProduct>(&comp)) {
      if (cp->dim != 2) throw std::invalid_argument("cauchy_product: depth needs dim == 2");
      const double scale = std::abs(u.x) + std::abs(u.y);
      out.open_part += cp->weight * cauchy_tail((c - u.dot({cp->center.x, cp->center.y})) / scale);
    } else if (const auto* ax = std::get_if<AxisCauchyMixture>(&comp)) {
      if (ax->dim != 2) throw std::invalid_argument("axis_cauchy: depth needs dim == 2");
      const double per_axis = ax->weight / ax->dim;
      const double uc[2] = {u.x, u.y};
      for (int i = 0; i < 2; ++i) {
        if (std::abs(uc[i]) <= kAxisTol) {
          if (c < 0.0) out.open_part += per_axis;
          // c == 0: the axis lies in the boundary line; ray terms handle it.
        } else if (uc[i] > 0) {
          out.open_part += per_axis * cauchy_tail(c / uc[i]);
        } else {
          out.open_part += per_axis * cauchy_cdf(c / uc[i]);
        }
      }
      // Boundary ray along an axis.
      if (std::abs(u.y) <= kAxisTol && x.y == 0.0) {
        // boundary is the horizontal axis through x
        out.ray_plus += per_axis * (r.x > 0 ? cauchy_tail(x.x) : cauchy_cdf(x.x));
        out.ray_minus += per_axis * (r.x > 0 ? cauchy_cdf(x.x) : cauchy_tail(x.x));
      } else if (std::abs(u.x) <= kAxisTol && x.x == 0.0) {
        out.ray_plus += per_axis * (r.y > 0 ? cauchy_tail(x.y) : cauchy_cdf(x.y));
        out.ray_minus += per_axis * (r.y > 0 ? cauchy_cdf(x.y) : cauchy_tail(x.y));
      }
    }
  }
  return out;
}

std::vector<Vec2> mixture_candidates(const Measure& m, const Point2& x, int coarse) {
  std::vector<Vec2> cands;
  cands.reserve(static_cast<std::size_t>(coarse) + 4 * m.atoms().size() + 4);
  for (int k = 0; k < coarse; ++k) {
    const double th = 2 * kPi * k / coarse;
    cands.push_back({std::cos(th), std::sin(th)});
  }
  // Exact axis normals: minimizers of the bundled closed-form components sit
  // there, and axis-parallel boundaries change the flag value discontinuously.
  cands.push_back({1, 0});
  cands.push_back({-1, 0});
  cands.push_back({0, 1});
  cands.push_back({0, -1});
  for (const Atom& a : m.atoms()) {
    const Vec2 d = a.position - x;
    const double n = d.norm();
    if (!(n > 0)) continue;
    const Vec2 ud{d.x / n, d.y / n};
    cands.push_back(rot90(ud));
    cands.push_back(-rot90(ud));
    cands.push_back(ud);
    cands.push_back(-ud);
  }
  return cands;
}

struct MixtureBest {
  double value = 0.0;
  Vec2 normal{1, 0};
  int ray_sign = +1;
};

MixtureBest mixture_minimum(const Measure& m, const Point2& x, const DepthOptions& opts) {
  MixtureBest best;
  bool have = false;
  auto consider = [&](const Vec2& u) {
    const FlagParts parts = eval_flag_parts(m, x, u);
    const double v = parts.value();
    if (!have || v < best.value) {
      have = true;
      best.value = v;
      best.normal = u;
      best.ray_sign = parts.ray_plus <= parts.ray_minus ? +1 : -1;
    }
  };
  for (const Vec2& u : mixture_candidates(m, x, opts.coarse_angles)) consider(u);
  if (opts.refine) {
    // Golden-section refinement around the best coarse angle. The objective
    // is smooth between atom/axis criticals, and those criticals were already
    // evaluated exactly above, so a local dip is all that is left to find.
    const double step = 2 * kPi / opts.coarse_angles;
    double a = std::atan2(best.normal.y, best.normal.x) - step;
    double b = a + 2 * step;
    auto g = [&](double th) {
      return eval_flag_parts(m, x, {std::cos(th), std::sin(th)}).value();
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = b - inv_phi * (b - a), c2 = a + inv_phi * (b - a);
    double f1 = g(c1), f2 = g(c2);
    while (b - a > opts.theta_tol) {
      if (f1 <= f2) {
        b = c2;
        c2 = c1;
        f2 = f1;
        c1 = b - inv_phi * (b - a);
        f1 = g(c1);
      } else {
        a = c1;
        c1 = c2;
        f1 = f2;
        c2 = a + inv_phi * (b - a);
        f2 = g(c2);
      }
    }
    consider({std::cos((a + b) / 2), std::sin((a + b) / 2)});
  }
  return best;
}

DepthValue mixture_depth_value(const Measure& m, const Point2& x, const DepthOptions& opts) {
  const MixtureBest best = mixture_minimum(m, x, opts);
  DepthValue out;
  out.value = MassValue::approx(best.value);
  const FlagHalfspace2D flag = FlagHalfspace2D::make(x, best.normal, best.ray_sign);
  out.witness = flag;
  const MassValue closed = halfspace_mass(m, flag.closed_halfspace());
  const double scale = std::max(1.0, m.total_mass().value());
  out.attained = std::abs(closed.value() - best.value) <= 1e-12 * scale;
  return out;
}

}  // namespace

DepthValue depth_atomic(const Measure& m, const Point2& x) {
  return depth_atomic(m, RatPoint(x));
}

DepthValue depth_atomic(const Measure& m, const RatPoint& x) {
  if (!m.purely_atomic())
    throw std::invalid_argument("depth_atomic requires a purely atomic measure");
  return atomic_depth_value(m, x);
}

DepthValue depth_flag(const Measure& m, const Point2& x, const DepthOptions& opts) {
  if (m.purely_atomic()) {
    RatVec2 wn, wr;
    const Rational value = exact::atomic_flag_depth(m.atoms(), RatPoint(x), &wn, &wr);
    DepthValue out;
    out.value = MassValue::exact(value);
    const Vec2 u = to_unit(wn);
    Vec2 r = to_unit(wr);
    // keep the ray numerically orthogonal to the normal
    r = normalized(rot90(u).dot(r) >= 0 ? rot90(u) : -rot90(u));
    out.witness = FlagHalfspace2D(x, u, r);
    // Atoms at x sit on the boundary, so the closed mass already counts them.
    const Rational closed =
        exact::atoms_halfplane_mass(m.atoms(), RatPoint(x), wn, /*open=*/false);
    out.attained = closed == value;
    return out;
  }
  return mixture_depth_value(m, x, opts);
}

DepthValue depth(const Measure& m, const Point2& x, const DepthOptions& opts) {
  if (m.purely_atomic()) return depth_atomic(m, x);
  return depth_flag(m, x, opts);
}

bool depth_below(const Measure& m, const Point2& x, double alpha, const DepthOptions& opts) {
  if (m.purely_atomic()) {
    const Rational v = exact::atomic_depth(m.atoms(), RatPoint(x));
    return rational_to_double(v) < alpha;
  }
  for (const Vec2& u : mixture_candidates(m, x, opts.coarse_angles)) {
    if (eval_flag_parts(m, x, u).value() < alpha) return true;
  }
  return false;
}

}  // namespace halfdepth
