#include "halfdepth/reference_measures.hpp"

#include "halfdepth/depth.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace halfdepth;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("model constants") {
  const DiskAtomModel model(0.1);
  CHECK(model.atom_level() == doctest::Approx((kPi - 2) / (4 * kPi)).epsilon(1e-15));
  CHECK(model.atom_level() == doctest::Approx(0.09084505690810459).epsilon(1e-12));
  CHECK(model.disk_depth(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(model.disk_depth(2.0) == 0.0);
  CHECK_THROWS_AS(DiskAtomModel(0.6), std::invalid_argument);
}

TEST_CASE("disk level radius inverts the segment formula") {
  const DiskAtomModel model(0.1);
  for (double beta : {0.05, 0.2, 0.35, 0.49}) {
    const double r = model.disk_radius_of_level(beta);
    CHECK(model.disk_depth(r) == doctest::Approx(beta).epsilon(1e-10));
  }
}

TEST_CASE("model depth at reference points") {
  const DiskAtomModel model(0.1);
  // at the atom: disk level of the atom location plus the atom mass
  CHECK(model.depth(model.atom()) ==
        doctest::Approx(model.atom_level() + 0.1).epsilon(1e-9));
  // at (1, 0): the disk segment value at radius 1 (hull bands do not reach it)
  const double expect = 1.0 / 3.0 - std::sqrt(3.0) / (4 * kPi);
  CHECK(model.depth({1, 0}) == doctest::Approx(expect).epsilon(1e-9));
  CHECK(model.depth({0, 0}) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(model.depth({2.5, -2.5}) == 0.0);
  // boundary point opposite the atom: tangent halfplane carries no mass
  CHECK(model.depth({-std::sqrt(2.0), -std::sqrt(2.0)}) ==
        doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("model agrees with the generic engine on a grid") {
  const DiskAtomModel model(0.1);
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  double worst = 0.0;
  for (int iy = 0; iy < 13; ++iy) {
    for (int ix = 0; ix < 13; ++ix) {
      const Point2 p{-2.4 + 4.8 * ix / 12.0, -2.4 + 4.8 * iy / 12.0};
      worst = std::max(worst, std::abs(model.depth(p) - depth(m, p).value.value()));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("case bands and membership") {
  const DiskAtomModel model(0.1);
  const double a0 = model.atom_level();
  CHECK(model.case_band(0.5 * a0) == 1);
  CHECK(model.case_band(a0 + 0.05) == 2);
  CHECK(model.case_band(a0 + 0.15) == 3);
  // the atom belongs to hull-band regions but not to clipped-band ones
  CHECK(model.region_contains(a0 + 0.05, model.atom()));
  CHECK(model.region_contains(a0 + 0.1, model.atom()));
  CHECK(!model.region_contains(a0 + 0.11, model.atom()));
  // band-1 regions are rotation invariant
  const double r = model.disk_radius_of_level(0.5 * a0);
  CHECK(model.region_contains(0.5 * a0, {r - 1e-9, 0}));
  CHECK(!model.region_contains(0.5 * a0, {r + 1e-9, 0}));
}

TEST_CASE("support function dominates sampled boundary points") {
  const DiskAtomModel model(0.1);
  for (double beta : {0.05, model.atom_level() + 0.05, model.atom_level() + 0.2}) {
    for (int k = 0; k < 64; ++k) {
      const double th = 2 * kPi * k / 64;
      const Vec2 u{std::cos(th), std::sin(th)};
      const double h = model.support(beta, u);
      // points a hair inside the region never exceed the support value
      for (int j = 0; j < 32; ++j) {
        const double phi = 2 * kPi * j / 32;
        // crude interior samples along rays from the origin
        for (double t = 0.1; t < 2.0; t += 0.2) {
          const Point2 p{t * std::cos(phi), t * std::sin(phi)};
          if (model.region_contains(beta, p)) CHECK(u.dot({p.x, p.y}) <= h + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("builders have the documented totals") {
  CHECK(disk_with_atom_measure(Rational(1, 10)).total_mass().value() ==
        doctest::Approx(1.1).epsilon(1e-15));
  CHECK(cauchy_cross_mu(2).total_mass().value() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(cauchy_cross_nu(2).total_mass().value() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cauchy_cross_mu(4).total_mass().value() == doctest::Approx(0.625).epsilon(1e-15));
  CHECK_THROWS_AS(disk_with_atom_measure(Rational(1)), std::invalid_argument);
}
