#include "halfdepth/reconstruct.hpp"

#include "halfdepth/parallel.hpp"
#include "halfdepth/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace halfdepth {

namespace {

constexpr double kPi = std::numbers::pi;

struct RatPointLess {
  bool operator()(const RatPoint& a, const RatPoint& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Brute-force filtered depth for fast oracle evaluation of atomic measures.
/// Exact sign decisions; the value is a plain double sum of the weights.
double atomic_depth_fast(const std::vector<Atom>& atoms, const std::vector<double>& weights,
                         const Point2& x) {
  double at_x = 0.0;
  std::vector<std::size_t> off;
  off.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].position == x)
      at_x += weights[i];
    else
      off.push_back(i);
  }
  if (off.empty()) return at_x;
  double best = -1.0;
  for (std::size_t i : off) {
    const Vec2 d = atoms[i].position - x;
    const Vec2 normals[4] = {rot90(d), -rot90(d), d, -d};
    for (const Vec2& n : normals) {
      double open_sum = 0, ray_plus = 0, ray_minus = 0;
      const Vec2 r = rot90(n);
      for (std::size_t j : off) {
        const int s = side_sign(n, atoms[j].position, x);
        if (s > 0) {
          open_sum += weights[j];
        } else if (s == 0) {
          (side_sign(r, atoms[j].position, x) > 0 ? ray_plus : ray_minus) += weights[j];
        }
      }
      const double v = open_sum + std::min(ray_plus, ray_minus);
      if (best < 0 || v < best) best = v;
    }
  }
  return at_x + best;
}

}  // namespace

DepthOracle DepthOracle::from_measure(const Measure& m, std::optional<BBox> bbox,
                                      const DepthOptions& opts) {
  auto shared = std::make_shared<Measure>(m);
  DepthOracle o;
  o.bbox = bbox ? *bbox : shared->default_bbox();
  o.total_mass = shared->total_mass().value();
  if (shared->purely_atomic()) {
    auto weights = std::make_shared<std::vector<double>>();
    for (const Atom& a : shared->atoms()) weights->push_back(rational_to_double(a.weight));
    o.eval = [shared, weights](const Point2& p) {
      return atomic_depth_fast(shared->atoms(), *weights, p);
    };
    o.below = [shared, weights](const Point2& p, double alpha) {
      return atomic_depth_fast(shared->atoms(), *weights, p) < alpha;
    };
    o.eval_exact = [shared](const RatPoint& p) { return exact::atomic_depth(shared->atoms(), p); };
  } else {
    o.eval = [shared, opts](const Point2& p) { return depth(*shared, p, opts).value.value(); };
    o.below = [shared, opts](const Point2& p, double alpha) {
      return depth_below(*shared, p, alpha, opts);
    };
  }
  return o;
}

DepthOracle DepthOracle::from_function(std::function<double(const Point2&)> fn, const BBox& bbox,
                                       std::optional<double> total_mass) {
  DepthOracle o;
  o.eval = std::move(fn);
  o.below = [eval = o.eval](const Point2& p, double alpha) { return eval(p) < alpha; };
  o.bbox = bbox;
  o.total_mass = total_mass;
  return o;
}

namespace {

DepthProbe probe_from_oracle(const DepthOracle& oracle) {
  DepthProbe probe;
  probe.value = oracle.eval;
  probe.below = oracle.below ? oracle.below
                             : [eval = oracle.eval](const Point2& p, double alpha) {
                                 return eval(p) < alpha;
                               };
  return probe;
}

}  // namespace

std::vector<Contour> support_report(const DepthOracle& oracle, const std::vector<double>& levels,
                                    const MixtureRegionOptions& opts) {
  const DepthProbe probe = probe_from_oracle(oracle);
  std::vector<Contour> out;
  for (double level : levels) {
    if (!(level > 0)) continue;
    const CentralRegion region = central_region_probe(probe, oracle.bbox, level, opts);
    if (region.empty()) continue;
    Contour c;
    c.level = level;
    if (const ApproxConvexBody* b = region.approx()) {
      for (std::size_t i = 0; i < b->size(); ++i) c.points.push_back(b->sample(i));
    } else if (const RegionPolygon* poly = region.polygon()) {
      c.points = poly->vertices;
    }
    out.push_back(std::move(c));
  }
  return out;
}

JumpResult jump_along_line(const DepthOracle& oracle, const Point2& x, const Point2& z,
                           const JumpOptions& opts) {
  const Vec2 d = x - z;
  const double n = d.norm();
  if (!(n > 0)) throw std::invalid_argument("jump_along_line: x and z must differ");
  const Vec2 u{d.x / n, d.y / n};

  auto limit = [&](double sgn, bool* ok) {
    double t = opts.t0;
    double prev = oracle.eval({x.x + sgn * t * u.x, x.y + sgn * t * u.y});
    *ok = false;
    double cur = prev;
    for (int k = 0; k < opts.max_halvings; ++k) {
      t /= 2;
      cur = oracle.eval({x.x + sgn * t * u.x, x.y + sgn * t * u.y});
      if (std::abs(cur - prev) <= opts.tol) {
        *ok = true;
        break;
      }
      prev = cur;
    }
    return cur;
  };

  JumpResult out;
  bool ok_beyond = false, ok_inside = false;
  out.beyond_limit = limit(+1.0, &ok_beyond);
  out.inside_limit = limit(-1.0, &ok_inside);
  out.depth_at_x = oracle.eval(x);
  out.stabilized = ok_beyond && ok_inside;
  out.jump = std::max(out.depth_at_x, out.inside_limit) - out.beyond_limit;
  return out;
}

std::vector<AtomCandidate> ReconstructionReport::confident_candidates() const {
  std::vector<AtomCandidate> out;
  for (const AtomCandidate& c : candidates)
    if (c.confident) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// detect_atoms
// ---------------------------------------------------------------------------

namespace {

struct Cluster {
  Point2 location;      // refined location from the highest level seen
  double best_level;    // that level
  double turning;       // strongest turning observed
  std::vector<double> levels;
  bool degenerate_median = false;  // arose from a collapsed (point-like) region
};

}  // namespace

ReconstructionReport detect_atoms(const DepthOracle& oracle, const std::vector<double>& levels,
                                  const DetectOptions& opts) {
  ReconstructionReport report;
  report.verdict = "DETECT";
  const DepthProbe probe = probe_from_oracle(oracle);
  const BBox& bbox = oracle.bbox;
  const double diag = bbox.diagonal();
  const double cluster_radius = opts.cluster_radius > 0 ? opts.cluster_radius : 1e-4 * diag;

  // Deepest point of a coarse grid: reference for jumps and region scans.
  Point2 deep = bbox.center();
  double deep_value = probe.value(deep);
  const int G = 17;
  for (int iy = 0; iy < G; ++iy) {
    for (int ix = 0; ix < G; ++ix) {
      const Point2 p{bbox.lo.x + bbox.width() * (ix + 0.5) / G,
                     bbox.lo.y + bbox.height() * (iy + 0.5) / G};
      const double v = probe.value(p);
      if (v > deep_value) {
        deep_value = v;
        deep = p;
      }
    }
  }

  std::vector<double> sorted_levels = levels;
  std::sort(sorted_levels.begin(), sorted_levels.end());

  std::vector<Cluster> clusters;
  auto absorb = [&](const Point2& loc, double level, double turning, bool degenerate) {
    for (Cluster& c : clusters) {
      if ((c.location - loc).norm() <= cluster_radius) {
        c.levels.push_back(level);
        if (level > c.best_level) {
          c.best_level = level;
          c.location = loc;
          c.turning = turning;
        }
        c.degenerate_median = c.degenerate_median && degenerate;
        return;
      }
    }
    Cluster c;
    c.location = loc;
    c.best_level = level;
    c.turning = turning;
    c.levels = {level};
    c.degenerate_median = degenerate;
    clusters.push_back(std::move(c));
  };

  MixtureRegionOptions region_opts = opts.region;
  region_opts.deep_hint = deep;
  for (double level : sorted_levels) {
    if (!(level > 0) || level > deep_value) continue;
    const CentralRegion region = central_region_probe(probe, bbox, level, region_opts);
    const ApproxConvexBody* body = region.approx();
    if (!body || body->size() == 0) continue;
    double max_extent = 0.0;
    for (std::size_t i = 0; i < body->size(); ++i)
      max_extent = std::max(max_extent, body->t_inner[i]);
    if (max_extent <= 2 * region_opts.tol) {
      // Region collapsed to (nearly) a point.
      absorb(body->center, level, kPi, /*degenerate=*/true);
      continue;
    }
    for (const CornerCandidate& c : corner_candidates(*body, opts.corners))
      absorb(c.location, level, c.turning, /*degenerate=*/false);
  }

  const double total = oracle.total_mass.value_or(1.0);
  const double mass_floor =
      opts.mass_floor > 0 ? opts.mass_floor : std::max(1e-3 * total, 10 * opts.jump.tol);

  for (const Cluster& c : clusters) {
    if (static_cast<int>(c.levels.size()) < opts.min_persistence) continue;
    AtomCandidate cand;
    cand.location = c.location;
    cand.level_lo = *std::min_element(c.levels.begin(), c.levels.end());
    cand.level_hi = *std::max_element(c.levels.begin(), c.levels.end());
    const bool has_deeper = deep_value > cand.level_hi + 10 * opts.jump.tol &&
                            (deep - c.location).norm() > 10 * opts.jump.t0;
    if (has_deeper) {
      JumpOptions jo = opts.jump;
      jo.t0 = std::min(jo.t0, 0.25 * (deep - c.location).norm());
      const JumpResult jr = jump_along_line(oracle, c.location, deep, jo);
      cand.level = std::max(jr.depth_at_x, jr.inside_limit);
      cand.mass_estimate = jr.jump;
      cand.mass_lower = std::max(0.0, jr.jump - 10 * opts.jump.tol);
      cand.jump_testable = true;
      cand.confident = jr.stabilized && jr.jump >= mass_floor;
    } else {
      // No deeper reference point: probe drops in a fan of directions.
      cand.level = probe.value(c.location);
      double min_limit = cand.level;
      for (int k = 0; k < 16; ++k) {
        const double th = 2 * kPi * k / 16;
        const Point2 zk{c.location.x - std::cos(th), c.location.y - std::sin(th)};
        const JumpResult jr = jump_along_line(oracle, c.location, zk, opts.jump);
        min_limit = std::min(min_limit, jr.beyond_limit);
        cand.level = std::max(cand.level, jr.inside_limit);
      }
      cand.mass_estimate = std::max(0.0, cand.level - min_limit);
      cand.mass_lower = 0.0;
      cand.jump_testable = false;
      cand.confident = false;
    }
    if (cand.level_hi < cand.level) cand.level_hi = cand.level;
    if (cand.mass_estimate > 0 || cand.jump_testable) report.candidates.push_back(cand);
  }

  report.median.location = deep;
  report.median.level = deep_value;
  report.median.undecidable_by_jump = true;
  report.median.note =
      "deepest probed point; no deeper reference exists, the jump test cannot decide whether "
      "it carries an atom";
  return report;
}

Halfspace touching_halfspace_for_face(const CentralRegion& region, std::size_t face_index,
                                      const Point2& x) {
  std::vector<Point2> boundary;
  if (const RegionPolygon* poly = region.polygon()) {
    boundary = poly->vertices;
  } else if (const ApproxConvexBody* b = region.approx()) {
    boundary.reserve(b->size());
    for (std::size_t i = 0; i < b->size(); ++i) boundary.push_back(b->sample(i));
  } else {
    throw std::invalid_argument("touching_halfspace_for_face: empty region");
  }
  if (boundary.size() < 2) throw std::invalid_argument("region has no faces");
  const Point2 a = boundary[face_index % boundary.size()];
  const Point2 b = boundary[(face_index + 1) % boundary.size()];
  const Vec2 e = b - a;
  if (!(e.norm() > 0)) throw std::invalid_argument("degenerate face");
  // CCW boundary: interior on the left of e, so the outward normal is -rot90.
  const Vec2 outward = -rot90(e);
  const Halfspace h = Halfspace::through(a, outward);
  if (!h.contains_strictly(x))
    throw std::invalid_argument(
        "touching_halfspace_for_face: x must lie strictly beyond the face (open segments from x "
        "to the face must avoid the region)");
  return h;
}

// ---------------------------------------------------------------------------
// reconstruct_finite_atomic
// ---------------------------------------------------------------------------

namespace {

struct ExactCandidate {
  RatPoint location;
  Rational level;
  Rational mass;
};

/// Exact depth-drop scan: the smallest stabilized limit of depth just off x
/// along the given directions. Exact equality of three successive halvings.
Rational min_direction_limit(const DepthOracle& oracle, const RatPoint& x,
                             const std::vector<RatVec2>& dirs, const Rational& t0,
                             int max_halvings) {
  bool have = false;
  Rational min_limit = 0;
  for (const RatVec2& d : dirs) {
    if (d.is_zero()) continue;
    // Scale so the first probe sits at distance ~t0 in the max norm.
    Rational m = abs(d.x) > abs(d.y) ? abs(d.x) : abs(d.y);
    RatVec2 unit(d.x / m, d.y / m);
    Rational t = t0;
    Rational prev = oracle.eval_exact(RatPoint(x.x + t * unit.x, x.y + t * unit.y));
    int agree = 0;
    Rational cur = prev;
    for (int k = 0; k < max_halvings && agree < 2; ++k) {
      t /= 2;
      cur = oracle.eval_exact(RatPoint(x.x + t * unit.x, x.y + t * unit.y));
      if (cur == prev)
        ++agree;
      else
        agree = 0;
      prev = cur;
    }
    if (!have || cur < min_limit) {
      have = true;
      min_limit = cur;
    }
  }
  return min_limit;
}

std::vector<RatPoint> convex_hull_exact(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end(), RatPointLess{});
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RatPoint& a, const RatPoint& b) { return a == b; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<RatPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && sign((hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2])) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && sign((hull[k - 1] - hull[k - 2]).cross(pts[i] - hull[k - 2])) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

ExactReconstruction reconstruct_finite_atomic(const DepthOracle& oracle,
                                              const ExactReconstructOptions& opts) {
  if (!oracle.exact())
    throw std::invalid_argument("reconstruct_finite_atomic requires an exact-rational oracle");
  ExactReconstruction result;
  ReconstructionReport& report = result.report;

  // 1. Probe lattice anchored at integer multiples of the pitch.
  const Rational step = opts.probe_step;
  const Rational lo_x = rational_from_double(oracle.bbox.lo.x);
  const Rational lo_y = rational_from_double(oracle.bbox.lo.y);
  const Rational hi_x = rational_from_double(oracle.bbox.hi.x);
  const Rational hi_y = rational_from_double(oracle.bbox.hi.y);
  std::vector<RatPoint> probes;
  for (BigInt ix = ceil_rational(lo_x / step); Rational(ix) * step <= hi_x; ++ix)
    for (BigInt iy = ceil_rational(lo_y / step); Rational(iy) * step <= hi_y; ++iy)
      probes.emplace_back(Rational(ix) * step, Rational(iy) * step);

  std::vector<Rational> probe_depth(probes.size());
  parallel_for(probes.size(), [&](std::size_t i) { probe_depth[i] = oracle.eval_exact(probes[i]); });

  std::map<RatPoint, Rational, RatPointLess> depth_at;
  for (std::size_t i = 0; i < probes.size(); ++i) depth_at.emplace(probes[i], probe_depth[i]);

  // 2. Achieved levels seen on the lattice, deepest probe.
  std::set<Rational> level_set;
  std::size_t deep_idx = 0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probe_depth[i] > 0) level_set.insert(probe_depth[i]);
    if (probe_depth[i] > probe_depth[deep_idx]) deep_idx = i;
  }
  const RatPoint deep = probes[deep_idx];
  const Rational deep_depth = probe_depth[deep_idx];
  report.median.location = deep.to_point();
  report.median.level = rational_to_double(deep_depth);
  report.median.undecidable_by_jump = true;
  report.median.note = "deepest lattice probe";
  if (level_set.empty()) {
    // Zero everywhere: the empty measure.
    result.pass = true;
    result.measure = Measure(std::vector<Component>{});
    report.verdict = "PASS";
    return result;
  }

  // 3. Vertex candidates per achieved level.
  std::set<RatPoint, RatPointLess> candidate_locations;
  const double diag = oracle.bbox.diagonal();
  std::vector<Rational> levels(level_set.begin(), level_set.end());
  std::reverse(levels.begin(), levels.end());  // deepest first

  for (const Rational& alpha : levels) {
    const double alpha_d = rational_to_double(alpha);
    // Deepest probe attaining this level anchors the radial scan.
    std::size_t anchor = deep_idx;
    // In-region lattice points; their hull corners are candidates for thin
    // regions that radial rays cannot see (zero-width segments).
    std::vector<RatPoint> inside;
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (probe_depth[i] >= alpha) inside.push_back(probes[i]);

    const Point2 center = probes[anchor].to_point();
    DepthProbe probe;
    probe.value = oracle.eval;
    probe.below = oracle.below;
    MixtureRegionOptions ropts;
    ropts.directions = opts.region_directions;
    ropts.tol = std::max(1e-9, 1e-9 * diag);
    ropts.deep_hint = center;
    ropts.adaptive = true;
    ropts.adaptive_turn = 1e-3;
    ropts.coarse_grid = 1;
    const CentralRegion region = central_region_probe(probe, oracle.bbox, alpha_d, ropts);

    double max_extent = 0.0;
    if (const ApproxConvexBody* body = region.approx()) {
      for (std::size_t i = 0; i < body->size(); ++i)
        max_extent = std::max(max_extent, body->t_inner[i]);
      if (max_extent > 2 * ropts.tol) {
        ExtremePointOptions copts;
        copts.corner_threshold = 5e-3;
        for (const CornerCandidate& c : corner_candidates(*body, copts)) {
          // Snap the refined corner onto exact coordinates.
          const double window = std::max(1e-6, 4 * c.confidence_radius);
          const Rational sx = simplest_rational_in(rational_from_double(c.location.x - window),
                                                   rational_from_double(c.location.x + window));
          const Rational sy = simplest_rational_in(rational_from_double(c.location.y - window),
                                                   rational_from_double(c.location.y + window));
          candidate_locations.insert(RatPoint(sx, sy));
        }
      }
    }
    if (max_extent <= 2e-9 * diag || inside.size() <= 24) {
      // Degenerate or sparse region: lattice hull corners are exact already.
      for (const RatPoint& p : convex_hull_exact(inside)) candidate_locations.insert(p);
    }
  }

  // 4. Validate candidates: exact level, exact drop scan, positive mass.
  std::vector<ExactCandidate> validated;
  std::vector<RatPoint> deeper_refs;
  for (const RatPoint& loc : candidate_locations) {
    const Rational alpha = oracle.eval_exact(loc);
    if (alpha <= 0) continue;
    std::vector<RatVec2> dirs = {
        RatVec2(Rational(1), Rational(0)),  RatVec2(Rational(-1), Rational(0)),
        RatVec2(Rational(0), Rational(1)),  RatVec2(Rational(0), Rational(-1)),
        RatVec2(Rational(1), Rational(1)),  RatVec2(Rational(1), Rational(-1)),
        RatVec2(Rational(-1), Rational(1)), RatVec2(Rational(-1), Rational(-1))};
    // Rays away from a few deeper probes carry the certified drop.
    int added = 0;
    for (std::size_t i = 0; i < probes.size() && added < 6; ++i) {
      if (probe_depth[i] > alpha && !(probes[i] == loc)) {
        dirs.push_back(loc - probes[i]);
        ++added;
      }
    }
    const Rational limit =
        min_direction_limit(oracle, loc, dirs, step / 2, opts.jump.max_halvings);
    const Rational mass = alpha - limit;
    if (mass <= 0) continue;
    validated.push_back({loc, alpha, mass});
  }
  // Deepest-first: repair removes over-eager deep candidates before shallow ones.
  std::sort(validated.begin(), validated.end(),
            [](const ExactCandidate& a, const ExactCandidate& b) { return a.level > b.level; });

  // 5. Verification set: the lattice plus an offset grid disjoint from it.
  std::vector<RatPoint> verification = probes;
  const Rational shift = step / 3;
  for (const RatPoint& p : probes) verification.emplace_back(p.x + shift, p.y + shift);
  std::vector<Rational> oracle_vals(verification.size());
  parallel_for(verification.size(), [&](std::size_t i) {
    if (i < probes.size())
      oracle_vals[i] = probe_depth[i];
    else
      oracle_vals[i] = oracle.eval_exact(verification[i]);
  });

  auto build_atoms = [&](const std::vector<bool>& included) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < validated.size(); ++i)
      if (included[i])
        atoms.push_back({validated[i].location.to_point(), validated[i].mass});
    return atoms;
  };
  auto depth_of = [&](const std::vector<Atom>& atoms, const RatPoint& p) {
    return exact::atomic_depth(atoms, p);
  };

  // 6. Witness-driven repair: verify, drop the deepest candidate whose removal
  //    fixes the witness, repeat.
  std::vector<bool> included(validated.size(), true);
  std::optional<RatPoint> witness;
  for (int iter = 0; iter <= opts.max_repair; ++iter) {
    std::vector<Atom> atoms = build_atoms(included);
    witness.reset();
    std::vector<char> bad(verification.size(), 0);
    parallel_for(verification.size(), [&](std::size_t i) {
      bad[i] = depth_of(atoms, verification[i]) != oracle_vals[i];
    });
    for (std::size_t i = 0; i < verification.size(); ++i) {
      if (bad[i]) {
        witness = verification[i];
        break;
      }
    }
    if (!witness) break;
    const Rational want = oracle.eval_exact(*witness);
    bool fixed = false;
    for (std::size_t c = 0; c < validated.size() && !fixed; ++c) {
      if (!included[c]) continue;
      included[c] = false;
      if (depth_of(build_atoms(included), *witness) == want)
        fixed = true;
      else
        included[c] = true;
    }
    if (!fixed) break;
  }

  for (std::size_t i = 0; i < validated.size(); ++i) {
    if (!included[i]) continue;
    AtomCandidate cand;
    cand.location = validated[i].location.to_point();
    cand.level = rational_to_double(validated[i].level);
    cand.level_hi = cand.level;
    cand.level_lo = rational_to_double(validated[i].level - validated[i].mass);
    cand.mass_estimate = rational_to_double(validated[i].mass);
    cand.mass_lower = cand.mass_estimate;
    cand.jump_testable = validated[i].level < deep_depth;
    cand.confident = !witness.has_value();
    report.candidates.push_back(cand);
  }
  report.verification_points = verification.size();

  if (witness) {
    report.verdict = "FAIL";
    report.fail_witness = witness->to_point();
    result.pass = false;
    return result;
  }
  std::vector<Component> comps;
  FiniteAtomic fa;
  fa.atoms = build_atoms(included);
  comps.emplace_back(std::move(fa));
  result.measure = Measure(std::move(comps));
  result.pass = true;
  report.verdict = "PASS";
  report.verification_max_error = 0.0;
  return result;
}

std::string reconstruction_report_to_json(const ReconstructionReport& report,
                                          const std::vector<std::string>& contour_files) {
  nlohmann::json j;
  j["verdict"] = report.verdict;
  j["version"] = HALFDEPTH_VERSION_STRING;
  auto cands = nlohmann::json::array();
  for (const AtomCandidate& c : report.candidates) {
    nlohmann::json cj;
    cj["location"] = {c.location.x, c.location.y};
    cj["level"] = c.level;
    cj["persistence"] = {c.level_lo, c.level_hi};
    cj["mass_lower"] = c.mass_lower;
    cj["mass_estimate"] = c.mass_estimate;
    cj["jump_testable"] = c.jump_testable;
    cj["confident"] = c.confident;
    cands.push_back(cj);
  }
  j["candidates"] = cands;
  j["median"] = {{"location", {report.median.location.x, report.median.location.y}},
                 {"level", report.median.level},
                 {"undecidable_by_jump", report.median.undecidable_by_jump},
                 {"note", report.median.note}};
  j["contour_files"] = contour_files;
  j["verification"] = {{"points", report.verification_points},
                       {"max_error", report.verification_max_error}};
  if (report.fail_witness)
    j["fail_witness"] = {report.fail_witness->x, report.fail_witness->y};
  return j.dump(2) + "\n";
}

}  // namespace halfdepth
