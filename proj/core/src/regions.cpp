#include "halfdepth/regions.hpp"

#include "halfdepth/parallel.hpp"
#include "halfdepth/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace halfdepth {

namespace {

constexpr double kPi = std::numbers::pi;

struct DirLess {
  bool operator()(const RatVec2& a, const RatVec2& b) const {
    return compare_directions(a, b) < 0;
  }
};

struct RatPointLess {
  bool operator()(const RatPoint& a, const RatPoint& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

std::vector<RatPoint> clip_halfplane(const std::vector<RatPoint>& poly, const RatVec2& u,
                                     const Rational& c) {
  std::vector<RatPoint> out;
  const std::size_t n = poly.size();
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& A = poly[i];
    const RatPoint& B = poly[(i + 1) % n];
    const Rational da = c - (u.x * A.x + u.y * A.y);
    const Rational db = c - (u.x * B.x + u.y * B.y);
    if (da >= 0) out.push_back(A);
    if ((da >= 0) != (db >= 0)) {
      const Rational t = da / (da - db);
      out.emplace_back(A.x + t * (B.x - A.x), A.y + t * (B.y - A.y));
    }
  }
  // drop consecutive duplicates
  std::vector<RatPoint> dedup;
  dedup.reserve(out.size());
  for (const RatPoint& p : out)
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

/// Distinct vertices, oriented counterclockwise, collinear middles removed.
/// Degenerate results keep one (point) or two (segment endpoints) vertices.
std::vector<RatPoint> canonicalize_polygon(std::vector<RatPoint> poly) {
  std::vector<RatPoint> distinct;
  for (const RatPoint& p : poly) {
    bool seen = false;
    for (const RatPoint& q : distinct) seen = seen || q == p;
    if (!seen) distinct.push_back(p);
  }
  if (distinct.size() <= 2) return distinct;

  Rational area2 = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RatPoint& p = poly[i];
    const RatPoint& q = poly[(i + 1) % poly.size()];
    area2 += p.x * q.y - q.x * p.y;
  }
  if (area2 == 0) {
    // all vertices on one line: keep the two extremes
    const RatVec2 dir = distinct[1] - distinct[0];
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < distinct.size(); ++i) {
      if (dir.dot(distinct[i] - distinct[lo]) < 0) lo = i;
      if (dir.dot(distinct[i] - distinct[hi]) > 0) hi = i;
    }
    return {distinct[lo], distinct[hi]};
  }
  if (area2 < 0) std::reverse(poly.begin(), poly.end());

  std::vector<RatPoint> cleaned;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& prev = poly[(i + n - 1) % n];
    const RatPoint& cur = poly[i];
    const RatPoint& next = poly[(i + 1) % n];
    if (cur == prev) continue;
    if (sign((cur - prev).cross(next - cur)) == 0) continue;
    cleaned.push_back(cur);
  }
  return cleaned;
}

RegionPolygon make_polygon(std::vector<RatPoint> exact) {
  RegionPolygon poly;
  poly.exact_vertices = std::move(exact);
  poly.vertices.reserve(poly.exact_vertices.size());
  for (const RatPoint& p : poly.exact_vertices) poly.vertices.push_back(p.to_point());
  return poly;
}

double turning_at(const Point2& prev, const Point2& cur, const Point2& next) {
  const Vec2 in = cur - prev, out = next - cur;
  const double ni = in.norm(), no = out.norm();
  if (!(ni > 0) || !(no > 0)) return 0.0;
  const double c = std::clamp(in.dot(out) / (ni * no), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace

std::vector<Rational> achieved_levels(const Measure& m) {
  if (!m.purely_atomic())
    throw std::invalid_argument("achieved_levels requires a purely atomic measure");
  const std::vector<Atom>& atoms = m.atoms();
  std::set<RatPoint, RatPointLess> candidates;
  for (const Atom& a : atoms) candidates.insert(RatPoint(a.position));

  // Intersections of lines through atom pairs.
  struct Line {
    RatPoint p;
    RatVec2 d;
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      lines.push_back({RatPoint(atoms[i].position),
                       RatPoint(atoms[j].position) - RatPoint(atoms[i].position)});
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rational den = lines[i].d.cross(lines[j].d);
      if (den == 0) continue;
      const Rational t = (lines[j].p - lines[i].p).cross(lines[j].d) / den;
      candidates.insert(RatPoint(lines[i].p.x + t * lines[i].d.x,
                                 lines[i].p.y + t * lines[i].d.y));
    }
  }

  std::set<Rational> values;
  values.insert(Rational(0));
  for (const RatPoint& p : candidates) values.insert(exact::atomic_depth(atoms, p));
  return {values.begin(), values.end()};
}

CentralRegion central_region_atomic(const Measure& m, const Rational& alpha) {
  if (!m.purely_atomic())
    throw std::invalid_argument("central_region_atomic requires a purely atomic measure");
  if (alpha <= 0)
    throw std::invalid_argument("central_region_atomic: level must be positive (the region at "
                                "level 0 is the whole plane)");
  CentralRegion region;
  region.level = MassValue::exact(alpha);

  const std::vector<Atom>& atoms = m.atoms();
  Rational total = 0;
  for (const Atom& a : atoms) total += a.weight;
  if (alpha > total) {
    region.shape = EmptyRegion{"level exceeds the total mass"};
    return region;
  }

  // Candidate facet normals: perpendicular and parallel to every atom-pair
  // difference, plus the axes (covers the single-atom case).
  std::set<RatVec2, DirLess> normals;
  normals.insert(RatVec2(Rational(1), Rational(0)));
  normals.insert(RatVec2(Rational(-1), Rational(0)));
  normals.insert(RatVec2(Rational(0), Rational(1)));
  normals.insert(RatVec2(Rational(0), Rational(-1)));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const RatVec2 d = RatPoint(atoms[j].position) - RatPoint(atoms[i].position);
      normals.insert(d);
      normals.insert(-d);
      normals.insert(rat_rot90(d));
      normals.insert(-rat_rot90(d));
    }
  }

  // Starting box strictly containing every atom.
  Rational lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  bool first = true;
  for (const Atom& a : atoms) {
    const RatPoint p(a.position);
    if (first) {
      lo_x = hi_x = p.x;
      lo_y = hi_y = p.y;
      first = false;
    } else {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  const Rational pad = (hi_x - lo_x) + (hi_y - lo_y) + 1;
  std::vector<RatPoint> poly = {{lo_x - pad, lo_y - pad},
                                {hi_x + pad, lo_y - pad},
                                {hi_x + pad, hi_y + pad},
                                {lo_x - pad, hi_y + pad}};

  for (const RatVec2& u : normals) {
    // Largest projection value whose closed tail still carries mass >= alpha.
    std::map<Rational, Rational> tail;  // projection -> weight at it
    for (const Atom& a : atoms) tail[u.dot(RatVec2(RatPoint(a.position).x, RatPoint(a.position).y))] += a.weight;
    Rational cum = 0;
    Rational cut;
    bool found = false;
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
      cum += it->second;
      if (cum >= alpha) {
        cut = it->first;
        found = true;
        break;
      }
    }
    if (!found) {
      region.shape = EmptyRegion{"level exceeds the mass seen by a direction"};
      return region;
    }
    poly = clip_halfplane(poly, u, cut);
    if (poly.empty()) {
      region.shape = EmptyRegion{""};
      return region;
    }
  }

  std::vector<RatPoint> verts = canonicalize_polygon(std::move(poly));
  if (verts.empty()) {
    region.shape = EmptyRegion{""};
    return region;
  }

  // Certificates. Vertices inside (with convexity this pins the polygon to
  // the exact region); pushed-out edge midpoints strictly below.
  for (const RatPoint& v : verts)
    if (exact::atomic_depth(atoms, v) < alpha)
      throw std::logic_error("central_region_atomic: candidate family insufficient (vertex "
                             "fails the depth bound)");
  const Rational eps = pad / (BigInt(1) << 24);
  auto check_outside = [&](const RatPoint& p) {
    if (exact::atomic_depth(atoms, p) >= alpha)
      throw std::logic_error("central_region_atomic: candidate family insufficient (outer "
                             "probe still deep)");
  };
  if (verts.size() == 1) {
    for (const RatVec2& d : {RatVec2(Rational(1), Rational(0)), RatVec2(Rational(-1), Rational(0)),
                             RatVec2(Rational(0), Rational(1)), RatVec2(Rational(0), Rational(-1))})
      check_outside(verts[0] + RatVec2(d.x * eps, d.y * eps));
  } else {
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
      const RatPoint& A = verts[i];
      const RatPoint& B = verts[(i + 1) % n];
      if (A == B) continue;
      const RatVec2 e = B - A;
      const RatVec2 outward = n == 2 ? rat_rot90(e) : -rat_rot90(e);  // CCW: interior on the left
      const RatPoint mid(A.x + e.x / 2 + outward.x * eps, A.y + e.y / 2 + outward.y * eps);
      check_outside(mid);
      if (n == 2) {
        const RatVec2 inward = -outward;
        check_outside(RatPoint(A.x + e.x / 2 + inward.x * eps, A.y + e.y / 2 + inward.y * eps));
      }
    }
  }

  region.shape = make_polygon(std::move(verts));
  return region;
}

DepthProbe probe_from_measure(const Measure& m, const DepthOptions& opts) {
  DepthProbe probe;
  probe.value = [&m, opts](const Point2& p) { return depth(m, p, opts).value.value(); };
  probe.below = [&m, opts](const Point2& p, double alpha) { return depth_below(m, p, alpha, opts); };
  return probe;
}

namespace {

struct RaySample {
  double angle;
  double t_in;
  double t_out;
};

RaySample scan_ray(const DepthProbe& probe, const Point2& deep, double angle, double alpha,
                   double r_max, double tol) {
  const Vec2 dir{std::cos(angle), std::sin(angle)};
  double lo = 0.0, hi = r_max;
  int expand = 0;
  while (!probe.below({deep.x + hi * dir.x, deep.y + hi * dir.y}, alpha) && expand < 4) {
    lo = hi;
    hi *= 2;
    ++expand;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (probe.below({deep.x + mid * dir.x, deep.y + mid * dir.y}, alpha))
      hi = mid;
    else
      lo = mid;
  }
  // Certify the inner point with the full evaluation; the bisection predicate
  // is allowed to be slightly optimistic.
  while (lo > 0.0 && probe.value({deep.x + lo * dir.x, deep.y + lo * dir.y}) < alpha)
    lo = std::max(0.0, lo - std::max(tol, 1e-12 * r_max));
  return {angle, lo, hi};
}

}  // namespace

CentralRegion central_region_probe(const DepthProbe& probe, const BBox& bbox, double alpha,
                                   const MixtureRegionOptions& opts) {
  if (!(alpha > 0)) throw std::invalid_argument("central_region_probe: level must be positive");
  CentralRegion region;
  region.level = MassValue::approx(alpha);

  // Deepest point of a coarse grid (plus hint and center).
  Point2 deep = bbox.center();
  double deep_value = probe.value(deep);
  auto consider = [&](const Point2& p) {
    const double v = probe.value(p);
    if (v > deep_value) {
      deep_value = v;
      deep = p;
    }
  };
  if (opts.deep_hint) consider(*opts.deep_hint);
  for (int iy = 0; iy < opts.coarse_grid; ++iy)
    for (int ix = 0; ix < opts.coarse_grid; ++ix)
      consider({bbox.lo.x + bbox.width() * (ix + 0.5) / opts.coarse_grid,
                bbox.lo.y + bbox.height() * (iy + 0.5) / opts.coarse_grid});
  if (deep_value < alpha) {
    region.shape = EmptyRegion{"no grid point reaches the requested level"};
    return region;
  }

  const double r_max = 1.5 * bbox.diagonal();
  std::vector<RaySample> samples(opts.directions);
  parallel_for(samples.size(), [&](std::size_t i) {
    samples[i] = scan_ray(probe, deep, 2 * kPi * i / opts.directions, alpha, r_max, opts.tol);
  });

  if (opts.adaptive) {
    int budget = opts.max_extra_directions;
    const double min_gap = 2 * kPi / opts.directions / 256.0;
    bool changed = true;
    while (changed && budget > 0) {
      changed = false;
      std::vector<double> inserts;
      const std::size_t n = samples.size();
      auto pt = [&](std::size_t i) {
        return Point2{deep.x + samples[i].t_in * std::cos(samples[i].angle),
                      deep.y + samples[i].t_in * std::sin(samples[i].angle)};
      };
      for (std::size_t i = 0; i < n && budget > static_cast<int>(inserts.size()); ++i) {
        const double turn = turning_at(pt((i + n - 1) % n), pt(i), pt((i + 1) % n));
        if (turn <= opts.adaptive_turn) continue;
        for (std::size_t j : {(i + n - 1) % n, i}) {
          const double a0 = samples[j].angle;
          double a1 = samples[(j + 1) % n].angle;
          if (a1 <= a0) a1 += 2 * kPi;
          if (a1 - a0 > min_gap) inserts.push_back(0.5 * (a0 + a1));
        }
      }
      if (!inserts.empty()) {
        std::vector<RaySample> fresh(inserts.size());
        parallel_for(inserts.size(), [&](std::size_t i) {
          fresh[i] = scan_ray(probe, deep, std::fmod(inserts[i], 2 * kPi), alpha, r_max, opts.tol);
        });
        samples.insert(samples.end(), fresh.begin(), fresh.end());
        std::sort(samples.begin(), samples.end(),
                  [](const RaySample& a, const RaySample& b) { return a.angle < b.angle; });
        samples.erase(std::unique(samples.begin(), samples.end(),
                                  [](const RaySample& a, const RaySample& b) {
                                    return a.angle == b.angle;
                                  }),
                      samples.end());
        budget -= static_cast<int>(fresh.size());
        changed = true;
      }
    }
  }

  ApproxConvexBody body;
  body.center = deep;
  body.angles.reserve(samples.size());
  for (const RaySample& s : samples) {
    body.angles.push_back(s.angle);
    body.t_inner.push_back(s.t_in);
    body.t_outer.push_back(s.t_out);
    body.tol = std::max(body.tol, s.t_out - s.t_in);
  }
  region.shape = std::move(body);
  return region;
}

CentralRegion central_region_mixture(const Measure& m, const BBox& bbox, double alpha,
                                     const MixtureRegionOptions& opts) {
  return central_region_probe(probe_from_measure(m, opts.depth), bbox, alpha, opts);
}

std::vector<CornerCandidate> corner_candidates(const ApproxConvexBody& b,
                                               const ExtremePointOptions& opts) {
  std::vector<CornerCandidate> out;
  const std::size_t n = b.size();
  if (n < 8) return out;
  std::vector<double> turn(n);
  for (std::size_t i = 0; i < n; ++i)
    turn[i] = turning_at(b.sample((i + n - 1) % n), b.sample(i), b.sample((i + 1) % n));
  for (std::size_t i = 0; i < n; ++i) {
    if (turn[i] <= opts.corner_threshold) continue;
    // keep local maxima of runs above the threshold
    if (turn[(i + n - 1) % n] > turn[i] || turn[(i + 1) % n] >= turn[i]) continue;
    CornerCandidate c;
    c.turning = turn[i];
    // Refine as the intersection of the two adjacent edge lines.
    const Point2 p_m3 = b.sample((i + n - 3) % n), p_m1 = b.sample((i + n - 1) % n);
    const Point2 p_p1 = b.sample((i + 1) % n), p_p3 = b.sample((i + 3) % n);
    Point2 refined;
    const Point2 raw = b.sample(i);
    const double spacing = (p_p1 - p_m1).norm() + b.tol;
    if (line_intersection(p_m3, p_m1, p_p1, p_p3, &refined) &&
        (refined - raw).norm() < 4 * spacing) {
      c.location = refined;
      c.confidence_radius = b.tol + 0.1 * spacing;
    } else {
      c.location = raw;
      c.confidence_radius = spacing;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Point2> extreme_points(const CentralRegion& r, const ExtremePointOptions& opts) {
  if (r.empty()) throw std::invalid_argument("extreme_points: empty region");
  if (const RegionPolygon* poly = r.polygon()) return poly->vertices;
  std::vector<Point2> out;
  for (const CornerCandidate& c : corner_candidates(*r.approx(), opts)) out.push_back(c.location);
  return out;
}

namespace {

bool polygon_contains_exact(const std::vector<RatPoint>& poly, const RatPoint& p) {
  if (poly.empty()) return false;
  if (poly.size() == 1) return poly[0] == p;
  if (poly.size() == 2) {
    const RatVec2 d = poly[1] - poly[0];
    if (sign(d.cross(p - poly[0])) != 0) return false;
    const Rational t = d.dot(p - poly[0]);
    return t >= 0 && t <= d.dot(d);
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RatPoint& A = poly[i];
    const RatPoint& B = poly[(i + 1) % poly.size()];
    if (sign((B - A).cross(p - A)) < 0) return false;
  }
  return true;
}

}  // namespace

bool region_polygon_contains(const RegionPolygon& poly, const RatPoint& p) {
  return polygon_contains_exact(poly.exact_vertices, p);
}

namespace {

std::vector<Point2> region_boundary_points(const CentralRegion& r) {
  std::vector<Point2> pts;
  if (const RegionPolygon* poly = r.polygon()) {
    pts = poly->vertices;
  } else if (const ApproxConvexBody* b = r.approx()) {
    pts.reserve(b->size());
    for (std::size_t i = 0; i < b->size(); ++i) pts.push_back(b->sample(i));
  }
  return pts;
}

double polygon_signed_margin(const std::vector<Point2>& poly, const Point2& p) {
  // >= 0 inside (distance to boundary), < 0 outside.
  if (poly.size() < 3) {
    double d = std::numeric_limits<double>::infinity();
    if (poly.size() == 1) d = (p - poly[0]).norm();
    if (poly.size() == 2) d = point_segment_distance(p, poly[0], poly[1]);
    return -d;
  }
  double margin = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& A = poly[i];
    const Point2& B = poly[(i + 1) % poly.size()];
    const Vec2 e = B - A;
    const double len = e.norm();
    if (!(len > 0)) continue;
    const double cross = e.cross(p - A) / len;  // >0 on the interior (left) side
    margin = std::min(margin, cross);
    if (cross < 0) inside = false;
  }
  (void)inside;
  return margin;
}

}  // namespace

NestingReport region_nesting_check(const Measure& m, std::vector<double> levels, const BBox& bbox,
                                   const MixtureRegionOptions& opts) {
  NestingReport report;
  std::sort(levels.begin(), levels.end());
  std::vector<CentralRegion> regions;
  regions.reserve(levels.size());
  const bool exact_mode = m.purely_atomic();
  for (double lv : levels) {
    regions.push_back(exact_mode
                          ? central_region_atomic(m, rational_from_double(lv))
                          : central_region_mixture(m, bbox, lv, opts));
  }
  for (std::size_t i = 0; i + 1 < regions.size(); ++i) {
    const CentralRegion& outer = regions[i];      // lower level: larger region
    const CentralRegion& inner = regions[i + 1];  // higher level: must nest inside
    if (inner.empty()) continue;                  // empty nests in anything
    if (outer.empty()) {
      report.ok = false;
      report.violation = "level " + std::to_string(levels[i]) + " empty below level " +
                         std::to_string(levels[i + 1]);
      return report;
    }
    if (exact_mode) {
      const auto& op = outer.polygon()->exact_vertices;
      for (const RatPoint& v : inner.polygon()->exact_vertices) {
        if (!polygon_contains_exact(op, v)) {
          report.ok = false;
          report.violation = "vertex of level " + std::to_string(levels[i + 1]) +
                             " escapes level " + std::to_string(levels[i]);
          return report;
        }
      }
    } else {
      const std::vector<Point2> op = region_boundary_points(outer);
      const double slack = outer.approx()->tol + inner.approx()->tol + opts.tol;
      for (const Point2& p : region_boundary_points(inner)) {
        if (polygon_signed_margin(op, p) < -slack) {
          report.ok = false;
          report.violation = "sample of level " + std::to_string(levels[i + 1]) +
                             " escapes level " + std::to_string(levels[i]);
          return report;
        }
      }
    }
  }
  return report;
}

void write_region_csv(const CentralRegion& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[80];
  for (const Point2& p : region_boundary_points(r)) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", p.x, p.y);
    out << buf;
  }
}

std::string region_to_json(const CentralRegion& r, const std::string& measure_hash) {
  nlohmann::json j;
  j["level"] = r.level.value();
  if (r.level.is_exact()) j["level_exact"] = rational_to_string(r.level.rational());
  j["spec_hash"] = measure_hash;
  j["version"] = HALFDEPTH_VERSION_STRING;
  if (r.empty()) {
    j["type"] = "empty";
    j["diagnostic"] = std::get<EmptyRegion>(r.shape).diagnostic;
  } else if (const RegionPolygon* poly = r.polygon()) {
    j["type"] = "polygon";
    auto arr = nlohmann::json::array();
    for (const Point2& p : poly->vertices) arr.push_back({p.x, p.y});
    j["vertices"] = arr;
    auto ex = nlohmann::json::array();
    for (const RatPoint& p : poly->exact_vertices)
      ex.push_back({rational_to_string(p.x), rational_to_string(p.y)});
    j["vertices_exact"] = ex;
  } else {
    const ApproxConvexBody* b = r.approx();
    j["type"] = "approx";
    j["tolerance"] = b->tol;
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < b->size(); ++i) {
      const Point2 p = b->sample(i);
      arr.push_back({p.x, p.y});
    }
    j["samples"] = arr;
  }
  return j.dump(2) + "\n";
}

}  // namespace halfdepth
