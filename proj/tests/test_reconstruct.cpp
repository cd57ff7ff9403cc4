#include "halfdepth/reconstruct.hpp"

#include "halfdepth/oracle.hpp"
#include "halfdepth/reference_measures.hpp"
#include "halfdepth/selfcheck.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace halfdepth;

namespace {

constexpr double kPi = std::numbers::pi;

Measure atoms_measure(std::vector<Atom> atoms) {
  FiniteAtomic fa;
  fa.atoms = std::move(atoms);
  std::vector<Component> comps = {std::move(fa)};
  return Measure(std::move(comps));
}

bool same_atoms(const Measure& a, const Measure& b) {
  auto key = [](const Atom& t) { return std::make_pair(t.position.x, t.position.y); };
  std::vector<Atom> av = a.atoms(), bv = b.atoms();
  auto lt = [&](const Atom& x, const Atom& y) { return key(x) < key(y); };
  std::sort(av.begin(), av.end(), lt);
  std::sort(bv.begin(), bv.end(), lt);
  if (av.size() != bv.size()) return false;
  for (std::size_t i = 0; i < av.size(); ++i)
    if (!(key(av[i]) == key(bv[i]) && av[i].weight == bv[i].weight)) return false;
  return true;
}

}  // namespace

TEST_CASE("jump along a line sizes the atom of the disk-with-atom measure") {
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  const DepthOracle oracle = DepthOracle::from_measure(m, BBox{{-3, -3}, {3, 3}});
  JumpOptions opts;
  opts.t0 = 0.1;
  opts.tol = 1e-8;
  const JumpResult jr = jump_along_line(oracle, {1, 1}, {0, 0}, opts);
  CHECK(jr.stabilized);
  CHECK(jr.jump == doctest::Approx(0.1).epsilon(1e-5));
  // the beyond limit is the disk-only depth at the atom radius
  CHECK(jr.beyond_limit == doctest::Approx((kPi - 2) / (4 * kPi)).epsilon(1e-5));
}

TEST_CASE("jump is zero at points with locally constant depth") {
  const Measure sq = atoms_measure(
      {{{0, 0}, Rational(1)}, {{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}, {{1, 1}, Rational(1)}});
  const DepthOracle oracle = DepthOracle::from_measure(sq);
  JumpOptions opts;
  opts.t0 = 0.05;
  const JumpResult jr = jump_along_line(oracle, {0.5, 0.25}, {0.5, 0.5}, opts);
  CHECK(jr.stabilized);
  CHECK(jr.jump == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(jump_along_line(oracle, {0.5, 0.25}, {0.5, 0.25}, opts), std::invalid_argument);
}

TEST_CASE("exact round trip on hand-picked instances") {
  const Measure cases[] = {
      atoms_measure({{{0, 0}, Rational(1)}, {{2, 0}, Rational(1)}, {{0, 2}, Rational(1)}}),
      atoms_measure({{{0, 0}, Rational(2)}}),
      atoms_measure({{{0, 0}, Rational(1)}, {{1, 0}, Rational(1)}}),  // collinear pair
      atoms_measure({{{0, 0}, Rational(1)},
                     {{1, 0}, Rational(1)},
                     {{0, 1}, Rational(1)},
                     {{1, 1}, Rational(1)}}),  // median singleton is not an atom
      atoms_measure({{{-3, -3}, Rational(5)}, {{3, -3}, Rational(1)}, {{0, 4}, Rational(2)},
                     {{1, 1}, Rational(3)}}),
  };
  for (const Measure& m : cases) {
    const DepthOracle oracle = DepthOracle::from_measure(m);
    const ExactReconstruction rec = reconstruct_finite_atomic(oracle);
    REQUIRE(rec.pass);
    CHECK(rec.report.verdict == "PASS");
    CHECK(same_atoms(rec.measure, m));
  }
}

TEST_CASE("exact round trip on random instances") {
  for (int i = 0; i < 12; ++i) {
    const Measure m = random_atomic_instance(777000 + i, 8);
    const DepthOracle oracle = DepthOracle::from_measure(m);
    const ExactReconstruction rec = reconstruct_finite_atomic(oracle);
    REQUIRE(rec.pass);
    CHECK(same_atoms(rec.measure, m));
  }
}

TEST_CASE("detect_atoms on an atomic oracle reports the hull atoms") {
  const Measure tri = atoms_measure(
      {{{0, 0}, Rational(1)}, {{2, 0}, Rational(1)}, {{0, 2}, Rational(1)}});
  const DepthOracle oracle = DepthOracle::from_measure(tri, BBox{{-1.5, -1.5}, {3.5, 3.5}});
  const std::vector<double> levels = {0.3, 0.45, 0.6, 0.75, 0.9, 1.0};
  DetectOptions opts;
  opts.region.directions = 256;
  opts.region.tol = 1e-7;
  const ReconstructionReport report = detect_atoms(oracle, levels, opts);
  REQUIRE(report.candidates.size() == 3);
  for (const AtomCandidate& c : report.candidates) {
    CHECK(c.mass_estimate == doctest::Approx(1.0).epsilon(1e-4));
    CHECK_FALSE(c.jump_testable);  // the atoms sit at the maximal depth
  }
}

TEST_CASE("support report of an atomic triangle traces its boundary") {
  const Measure tri = atoms_measure(
      {{{0, 0}, Rational(1)}, {{2, 0}, Rational(1)}, {{0, 2}, Rational(1)}});
  const DepthOracle oracle = DepthOracle::from_measure(tri, BBox{{-1.5, -1.5}, {3.5, 3.5}});
  const std::vector<Contour> contours = support_report(oracle, {1.0});
  REQUIRE(contours.size() == 1);
  const Point2 corners[3] = {{0, 0}, {2, 0}, {0, 2}};
  for (const Point2& corner : corners) {
    double dist = 1e9;
    for (const Point2& p : contours[0].points) dist = std::min(dist, (p - corner).norm());
    CHECK(dist <= 2e-3);  // atoms lie on the reported contour
  }
}

TEST_CASE("touching halfspaces") {
  const Measure sq = atoms_measure(
      {{{0, 0}, Rational(1)}, {{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}, {{1, 1}, Rational(1)}});
  const CentralRegion region = central_region_atomic(sq, Rational(1));
  REQUIRE(region.polygon());
  const auto& verts = region.polygon()->vertices;
  REQUIRE(verts.size() == 4);
  // find the edge whose outward side holds x
  const Point2 x{0.5, -2.0};
  bool found = false;
  for (std::size_t i = 0; i < verts.size() && !found; ++i) {
    try {
      const Halfspace h = touching_halfspace_for_face(region, i, x);
      found = true;
      CHECK(h.contains(x));
      // the supporting line of an atomic region edge carries >= 2 atoms
      int on_boundary = 0;
      for (const Atom& a : sq.atoms())
        if (h.boundary_contains(a.position)) ++on_boundary;
      CHECK(on_boundary >= 2);
      // interior of a touching halfspace of D_alpha has mass at most alpha... audit
      CHECK(open_halfspace_mass(sq, h).value() <= 1.0 + 1e-12);
    } catch (const std::invalid_argument&) {
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(touching_halfspace_for_face(region, 0, Point2{0.5, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("touching halfspace through the hull face of the disk-with-atom region") {
  const double delta = 0.1;
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  const DiskAtomModel model(delta);
  const double beta = model.atom_level() + 0.5 * delta;
  MixtureRegionOptions opts;
  opts.directions = 512;
  opts.tol = 1e-7;
  const CentralRegion region = central_region_mixture(m, {{-3, -3}, {3, 3}}, beta, opts);
  REQUIRE(region.approx());
  // face adjacent to the corner at the atom
  const ApproxConvexBody& b = *region.approx();
  std::size_t corner_idx = 0;
  double best = 1e9;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double d = (b.sample(i) - Point2{1, 1}).norm();
    if (d < best) {
      best = d;
      corner_idx = i;
    }
  }
  const Point2 x{1.6, 1.6};  // beyond the hull, outward from the atom
  const Halfspace h = touching_halfspace_for_face(region, corner_idx, x);
  CHECK(h.contains(x));
  // the face's supporting line passes near the atom, and the line through the
  // atom carries its mass: mass(boundary) >= alpha0 + delta - beta
  const double dist_to_line = std::abs(h.normal().dot({1.0, 1.0}) - h.offset());
  CHECK(dist_to_line <= 5e-3);
  CHECK(delta >= model.atom_level() + delta - beta);
  // audit: the open interior mass cannot exceed the region level
  CHECK(open_halfspace_mass(m, h).value() <= beta + 1e-3);
}

TEST_CASE("equal-depth neighborhoods carry no atoms") {
  SplitMix64 rng(4321);
  for (int i = 0; i < 20; ++i) {
    const Measure m = random_atomic_instance(60000 + i, 8);
    for (int trial = 0; trial < 20; ++trial) {
      const RatPoint c(Rational(static_cast<int>(rng.next() % 21) - 10, 2),
                       Rational(static_cast<int>(rng.next() % 21) - 10, 2));
      const Rational r(1, 4);
      // probe the center, a ring, and every atom inside the ball
      const Rational center_depth = exact::atomic_depth(m.atoms(), c);
      bool all_equal = true;
      for (int k = 0; k < 12 && all_equal; ++k) {
        const double th = 2 * kPi * k / 12;
        const RatPoint p(c.x + r * rational_from_double(std::cos(th)),
                         c.y + r * rational_from_double(std::sin(th)));
        all_equal = exact::atomic_depth(m.atoms(), p) == center_depth;
      }
      Rational inside_mass = 0;
      for (const Atom& a : m.atoms()) {
        const RatVec2 d = RatPoint(a.position) - c;
        if (d.dot(d) < r * r) {
          inside_mass += a.weight;
          if (exact::atomic_depth(m.atoms(), RatPoint(a.position)) != center_depth)
            all_equal = false;
        }
      }
      if (all_equal) CHECK(inside_mass == 0);
    }
  }
}

TEST_CASE("report serialization") {
  ReconstructionReport report;
  report.verdict = "DETECT";
  AtomCandidate c;
  c.location = {1, 1};
  c.level = 0.19;
  c.mass_estimate = 0.1;
  c.confident = true;
  report.candidates.push_back(c);
  report.median.location = {0, 0};
  report.median.undecidable_by_jump = true;
  const std::string json = reconstruction_report_to_json(report, {"contour_000.csv"});
  CHECK(json.find("\"verdict\": \"DETECT\"") != std::string::npos);
  CHECK(json.find("contour_000.csv") != std::string::npos);
  CHECK(json.find("undecidable_by_jump") != std::string::npos);
}

TEST_CASE("oracle constructors") {
  const Measure tri = atoms_measure(
      {{{0, 0}, Rational(1)}, {{2, 0}, Rational(1)}, {{0, 2}, Rational(1)}});
  const DepthOracle o = DepthOracle::from_measure(tri);
  CHECK(o.exact());
  CHECK(o.eval({1e9, 1e9}) == 0.0);
  CHECK(o.eval_exact(RatPoint(Rational(1, 3), Rational(1, 3))) == Rational(1));

  const DepthOracle fn = DepthOracle::from_function(
      [](const Point2& p) { return cauchy_cross_depth(p); }, BBox{{-3, -3}, {3, 3}}, 0.75);
  CHECK(!fn.exact());
  CHECK(fn.eval({0, 0}) == 0.5);
  CHECK_THROWS_AS(reconstruct_finite_atomic(fn), std::invalid_argument);
}
