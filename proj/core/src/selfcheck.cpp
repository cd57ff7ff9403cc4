#include "halfdepth/selfcheck.hpp"

#include "halfdepth/depth.hpp"
#include "halfdepth/oracle.hpp"
#include "halfdepth/parallel.hpp"
#include "halfdepth/reconstruct.hpp"
#include "halfdepth/reference_measures.hpp"
#include "halfdepth/regions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <set>

namespace halfdepth {

namespace {

constexpr double kPi = std::numbers::pi;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string format(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

}  // namespace

Measure random_atomic_instance(std::uint64_t seed, int max_atoms, int coord_range, int max_weight) {
  SplitMix64 rng(seed);
  const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_atoms));
  const int side = 2 * coord_range + 1;
  std::set<std::pair<int, int>> used;
  FiniteAtomic fa;
  while (static_cast<int>(fa.atoms.size()) < n) {
    const int x = static_cast<int>(rng.next() % side) - coord_range;
    const int y = static_cast<int>(rng.next() % side) - coord_range;
    if (!used.insert({x, y}).second) continue;
    const int w = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_weight));
    fa.atoms.push_back({{static_cast<double>(x), static_cast<double>(y)}, Rational(w)});
  }
  std::vector<Component> comps;
  comps.emplace_back(std::move(fa));
  return Measure(std::move(comps));
}

namespace {

/// Query points for the equivalence suites: the atoms themselves, lattice
/// points, and off-lattice rationals with denominator 3.
std::vector<RatPoint> instance_query_points(const Measure& m, std::uint64_t seed, int count) {
  SplitMix64 rng(seed ^ 0xabcdef12345ull);
  std::vector<RatPoint> pts;
  for (const Atom& a : m.atoms()) {
    pts.emplace_back(RatPoint(a.position));
    if (static_cast<int>(pts.size()) >= count) return pts;
  }
  while (static_cast<int>(pts.size()) < count) {
    const int num_x = static_cast<int>(rng.next() % 37) - 18;
    const int num_y = static_cast<int>(rng.next() % 37) - 18;
    const int den = 1 + static_cast<int>(rng.next() % 3);
    pts.emplace_back(Rational(num_x, den), Rational(num_y, den));
  }
  return pts;
}

}  // namespace

CheckLine check_flag_sweep_bruteforce_equivalence(int instances, int points_per_instance,
                                                  std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t comparisons = 0;
  for (int i = 0; i < instances; ++i) {
    const Measure m = random_atomic_instance(seed + i);
    for (const RatPoint& p : instance_query_points(m, seed + i, points_per_instance)) {
      const Rational sweep = exact::atomic_depth(m.atoms(), p);
      const Rational flag = exact::atomic_flag_depth(m.atoms(), p);
      const Rational brute = brute_force_depth_atomic(m.atoms(), p);
      ++comparisons;
      if (sweep != flag || sweep != brute) {
        return {"flag/sweep/brute-force equivalence", false,
                format("mismatch at instance %d (%s vs %s vs %s)", i,
                       rational_to_string(sweep).c_str(), rational_to_string(flag).c_str(),
                       rational_to_string(brute).c_str())};
      }
    }
  }
  return {"flag/sweep/brute-force equivalence", true,
          format("%zu exact comparisons across %d instances, %.1fs", comparisons, instances,
                 seconds_since(t0))};
}

CheckLine check_depth_drop_inequality(int instances, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (int i = 0; i < instances; ++i) {
    const Measure m = random_atomic_instance(seed + i);
    const std::vector<Atom>& atoms = m.atoms();
    std::vector<RatPoint> deeper_pool;
    for (const Atom& a : atoms) deeper_pool.emplace_back(RatPoint(a.position));
    for (const RatPoint& q : instance_query_points(m, seed + 7 * i + 1, 20))
      deeper_pool.push_back(q);
    for (const Atom& a : atoms) {
      const RatPoint x(a.position);
      const Rational alpha = exact::atomic_depth(atoms, x);
      const Rational mass = exact::atoms_point_mass(atoms, x);
      for (const RatPoint& z : deeper_pool) {
        if (z == x) continue;
        if (exact::atomic_depth(atoms, z) <= alpha) continue;
        const RatVec2 d = x - z;
        for (int k = 1; k <= 10; ++k) {
          const Rational s(k, 7);
          const RatPoint y(x.x + s * d.x, x.y + s * d.y);
          ++checks;
          if (exact::atomic_depth(atoms, y) > alpha - mass) {
            return {"depth drop beyond atoms", false,
                    format("violated at instance %d, atom (%g, %g)", i, a.position.x,
                           a.position.y)};
          }
        }
      }
    }
  }
  return {"depth drop beyond atoms", true,
          format("%zu exact inequalities across %d instances, %.1fs", checks, instances,
                 seconds_since(t0))};
}

CheckLine check_atom_vertex_incidence(int instances, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (int i = 0; i < instances; ++i) {
    const Measure m = random_atomic_instance(seed + i);
    for (const Atom& a : m.atoms()) {
      const RatPoint x(a.position);
      const Rational alpha = exact::atomic_depth(m.atoms(), x);
      const Rational mass = exact::atoms_point_mass(m.atoms(), x);
      const Rational betas[3] = {alpha, alpha - mass / 4, alpha - mass / 2};
      for (const Rational& beta : betas) {
        const CentralRegion region = central_region_atomic(m, beta);
        bool found = false;
        if (const RegionPolygon* poly = region.polygon()) {
          for (const RatPoint& v : poly->exact_vertices) found = found || v == x;
        }
        ++checks;
        if (!found) {
          return {"atoms are region vertices", false,
                  format("atom (%g, %g) missing from region at level %s (instance %d)",
                         a.position.x, a.position.y, rational_to_string(beta).c_str(), i)};
        }
      }
    }
  }
  return {"atoms are region vertices", true,
          format("%zu exact incidences across %d instances, %.1fs", checks, instances,
                 seconds_since(t0))};
}

CheckLine check_atomic_roundtrip(int instances, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < instances; ++i) {
    const Measure m = random_atomic_instance(seed + 1000 + i, /*max_atoms=*/8);
    const DepthOracle oracle = DepthOracle::from_measure(m);
    const ExactReconstruction rec = reconstruct_finite_atomic(oracle);
    if (!rec.pass)
      return {"atomic round trip", false, format("instance %d: verdict FAIL", i)};
    auto key = [](const Atom& a) { return std::make_pair(a.position.x, a.position.y); };
    std::vector<Atom> want = m.atoms(), got = rec.measure.atoms();
    auto lt = [&](const Atom& a, const Atom& b) { return key(a) < key(b); };
    std::sort(want.begin(), want.end(), lt);
    std::sort(got.begin(), got.end(), lt);
    bool same = want.size() == got.size();
    for (std::size_t k = 0; same && k < want.size(); ++k)
      same = key(want[k]) == key(got[k]) && want[k].weight == got[k].weight;
    if (!same)
      return {"atomic round trip", false,
              format("instance %d: recovered %zu atoms, expected %zu (or weights differ)", i,
                     got.size(), want.size())};
  }
  return {"atomic round trip", true,
          format("%d instances recovered exactly, %.1fs", instances, seconds_since(t0))};
}

CheckLine check_mass_closed_forms_mc(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t n = 100000;
  double worst_sigma = 0.0;
  for (int i = 0; i < 100; ++i) {
    SplitMix64 rng(seed + 31 * i);
    Component comp;
    Point2 anchor;
    if (i % 2 == 0) {
      UniformDisk d;
      d.center = {4 * rng.next_open01() - 2, 4 * rng.next_open01() - 2};
      d.radius = 0.5 + 2.5 * rng.next_open01();
      d.mass = 1.0;
      // boundary through a point inside the disk: the mass is non-extreme
      const double rr = d.radius * std::sqrt(rng.next_open01());
      const double th = 2 * kPi * rng.next_open01();
      anchor = {d.center.x + rr * std::cos(th), d.center.y + rr * std::sin(th)};
      comp = d;
    } else {
      CauchyProduct p;
      p.dim = 2;
      p.center = {2 * rng.next_open01() - 1, 2 * rng.next_open01() - 1};
      p.weight = 1.0;
      anchor = {p.center.x + 3 * rng.next_open01() - 1.5, p.center.y + 3 * rng.next_open01() - 1.5};
      comp = p;
    }
    const double ang = 2 * kPi * rng.next_open01();
    const Halfspace h = Halfspace::through(anchor, {std::cos(ang), std::sin(ang)});
    std::vector<Component> one = {comp};
    const Measure m(std::move(one));
    const double closed = halfspace_mass(m, h).value();
    const MonteCarloEstimate est = monte_carlo_mass(comp, h, n, seed + 977 * i);
    if (est.std_error <= 0.0)
      return {"closed-form mass vs Monte Carlo", false, format("case %d degenerate", i)};
    const double sigma = std::abs(est.estimate - closed) / est.std_error;
    worst_sigma = std::max(worst_sigma, sigma);
    if (sigma > 3.0)
      return {"closed-form mass vs Monte Carlo", false,
              format("case %d off by %.2f sigma (closed %.6f, estimate %.6f +- %.6f)", i, sigma,
                     closed, est.estimate, est.std_error)};
  }
  return {"closed-form mass vs Monte Carlo", true,
          format("100 cases within 3 sigma (worst %.2f), n=1e5 each, %.1fs", worst_sigma,
                 seconds_since(t0))};
}

CheckLine check_cross_depth_identity(int grid_n, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const Measure mu = cauchy_cross_mu(2);
  const Measure nu = cauchy_cross_nu(2);

  const double v_mu0 = depth(mu, {0.0, 0.0}).value.value();
  const double v_nu0 = depth(nu, {0.0, 0.0}).value.value();
  if (v_mu0 != 0.5 || v_nu0 != 0.5)
    return {"cauchy pair depth identity", false,
            format("origin depth not exactly 1/2 (mu %.17g, nu %.17g)", v_mu0, v_nu0)};

  std::vector<double> err_mu(grid_n * grid_n, 0.0), err_nu(grid_n * grid_n, 0.0);
  parallel_for(static_cast<std::size_t>(grid_n) * grid_n, [&](std::size_t idx) {
    const int iy = static_cast<int>(idx) / grid_n;
    const int ix = static_cast<int>(idx) % grid_n;
    const Point2 p{-3.0 + 6.0 * ix / (grid_n - 1), -3.0 + 6.0 * iy / (grid_n - 1)};
    const double want = cauchy_cross_depth(p);
    err_mu[idx] = std::abs(depth(mu, p).value.value() - want);
    err_nu[idx] = std::abs(depth(nu, p).value.value() - want);
  });
  const double max_mu = *std::max_element(err_mu.begin(), err_mu.end());
  const double max_nu = *std::max_element(err_nu.begin(), err_nu.end());
  const double elapsed = seconds_since(t0);
  const bool pass = max_mu < tol && max_nu < tol && elapsed < 60.0;
  return {"cauchy pair depth identity", pass,
          format("max |err| mu %.2e, nu %.2e on %dx%d grid, origin exact, %.1fs", max_mu, max_nu,
                 grid_n, grid_n, elapsed)};
}

CheckLine check_disk_atom_recovery(double delta) {
  const auto t0 = std::chrono::steady_clock::now();
  const Measure m = disk_with_atom_measure(rational_from_double(delta));
  const BBox bbox{{-3.0, -3.0}, {3.0, 3.0}};
  const DepthOracle oracle = DepthOracle::from_measure(m, bbox);

  std::vector<double> levels;
  for (double b = 0.01; b < 0.54; b += 0.01) levels.push_back(b);

  DetectOptions opts;
  opts.region.directions = 384;
  opts.region.tol = 1e-7;
  opts.jump.t0 = 0.05;
  opts.jump.tol = 1e-7;
  const ReconstructionReport report = detect_atoms(oracle, levels, opts);
  const auto confident = report.confident_candidates();
  const double elapsed = seconds_since(t0);
  if (confident.size() != 1)
    return {"disk-with-atom recovery", false,
            format("%zu confident candidates (want 1), %.1fs", confident.size(), elapsed)};
  const double loc_err = (confident[0].location - Point2{1.0, 1.0}).norm();
  const double mass_err = std::abs(confident[0].mass_estimate - delta);
  const bool pass = loc_err <= 1e-3 && mass_err <= 1e-3 && elapsed < 120.0;
  return {"disk-with-atom recovery", pass,
          format("one candidate, |loc err| %.2e, |mass err| %.2e, %.1fs", loc_err, mass_err,
                 elapsed)};
}

CheckLine check_disk_atom_regions(double delta) {
  const auto t0 = std::chrono::steady_clock::now();
  const DiskAtomModel model(delta);
  const Measure m = disk_with_atom_measure(rational_from_double(delta));
  const BBox bbox{{-3.0, -3.0}, {3.0, 3.0}};

  std::vector<double> levels;
  const double a0 = model.atom_level();
  for (int k = 1; k <= 5; ++k) levels.push_back(a0 * k / 5.0);                    // band 1
  for (int k = 1; k <= 5; ++k) levels.push_back(a0 + delta * k / 5.0);            // band 2
  for (int k = 1; k <= 5; ++k) levels.push_back(a0 + delta + (0.45 - a0 - delta) * k / 5.0);

  MixtureRegionOptions opts;
  opts.directions = 1024;
  opts.tol = 1e-7;
  opts.adaptive = true;
  opts.adaptive_turn = 0.02;

  double worst = 0.0;
  for (double beta : levels) {
    const CentralRegion region = central_region_mixture(m, bbox, beta, opts);
    const ApproxConvexBody* body = region.approx();
    if (!body || body->size() == 0)
      return {"disk-with-atom region geometry", false, format("empty region at level %.4f", beta)};
    // Hausdorff distance between convex bodies = sup over directions of the
    // support function difference.
    double h = 0.0;
    const int dirs = 8192;
    for (int k = 0; k < dirs; ++k) {
      const double th = 2 * kPi * k / dirs;
      const Vec2 u{std::cos(th), std::sin(th)};
      double h_region = -1e300;
      for (std::size_t i = 0; i < body->size(); ++i) {
        const Point2 p = body->sample(i);
        h_region = std::max(h_region, u.dot({p.x, p.y}));
      }
      h = std::max(h, std::abs(h_region - model.support(beta, u)));
    }
    worst = std::max(worst, h);
    if (h > 1e-4)
      return {"disk-with-atom region geometry", false,
              format("Hausdorff %.2e at level %.4f (band %d)", h, beta, model.case_band(beta))};
  }
  return {"disk-with-atom region geometry", true,
          format("15 levels within Hausdorff 1e-4 (worst %.2e), %.1fs", worst,
                 seconds_since(t0))};
}

CheckLine check_cross_negative_control() {
  const auto t0 = std::chrono::steady_clock::now();
  const BBox bbox{{-3.0, -3.0}, {3.0, 3.0}};
  const DepthOracle oracle =
      DepthOracle::from_function([](const Point2& p) { return cauchy_cross_depth(p); }, bbox, 0.75);

  std::vector<double> levels;
  for (double b = 0.02; b < 0.50; b += 0.01) levels.push_back(b);
  const ReconstructionReport report = detect_atoms(oracle, levels);
  if (!report.confident_candidates().empty())
    return {"cauchy pair negative control", false,
            format("%zu confident candidates (want 0)", report.confident_candidates().size())};
  if (!report.median.undecidable_by_jump ||
      (report.median.location - Point2{0.0, 0.0}).norm() > 0.2)
    return {"cauchy pair negative control", false, "median point not flagged undecidable"};

  // Support cannot be inferred: the contours stay away from points that both
  // true supports contain (an axis point for the singular measure, an
  // off-axis point for the full-support one).
  const std::vector<Contour> contours = support_report(oracle, {0.05, 0.1, 0.15, 0.2});
  const Point2 on_axis{2.5, 0.0};
  const Point2 off_axis{2.5, 2.5};
  double d_axis = 1e300, d_off = 1e300;
  for (const Contour& c : contours) {
    for (const Point2& p : c.points) {
      d_axis = std::min(d_axis, (p - on_axis).norm());
      d_off = std::min(d_off, (p - off_axis).norm());
    }
  }
  const bool pass = d_axis > 0.05 && d_off > 0.05;
  return {"cauchy pair negative control", pass,
          format("no candidates, median undecidable, supports not inferred (contour gaps %.2f / "
                 "%.2f), %.1fs",
                 d_axis, d_off, seconds_since(t0))};
}

CheckSummary run_property_suite(std::uint64_t seed) {
  CheckSummary s;
  s.lines.push_back(check_flag_sweep_bruteforce_equivalence(200, 20, seed));
  s.lines.push_back(check_depth_drop_inequality(200, seed));
  s.lines.push_back(check_atom_vertex_incidence(200, seed));
  s.lines.push_back(check_atomic_roundtrip(50, seed));
  s.lines.push_back(check_mass_closed_forms_mc(seed));
  return s;
}

CheckSummary run_acceptance_suite(std::uint64_t seed) {
  CheckSummary s;
  s.lines.push_back(check_cross_depth_identity());
  s.lines.push_back(check_disk_atom_recovery());
  s.lines.push_back(check_disk_atom_regions());
  s.lines.push_back(check_flag_sweep_bruteforce_equivalence(200, 20, seed));
  s.lines.push_back(check_depth_drop_inequality(200, seed));
  s.lines.push_back(check_atom_vertex_incidence(200, seed));
  s.lines.push_back(check_atomic_roundtrip(50, seed));
  s.lines.push_back(check_mass_closed_forms_mc(seed));
  s.lines.push_back(check_cross_negative_control());
  return s;
}

}  // namespace halfdepth
