#include "halfdepth/depth.hpp"

#include "halfdepth/oracle.hpp"
#include "halfdepth/reference_measures.hpp"
#include "halfdepth/selfcheck.hpp"

#include <doctest.h>

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

const Measure kTriangle =
    atoms_measure({{{0, 0}, Rational(1)}, {{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}});

}  // namespace

TEST_CASE("atomic depth basics") {
  const Measure single = atoms_measure({{{2, 3}, Rational(5)}});
  CHECK(depth_atomic(single, Point2{2, 3}).value.rational() == Rational(5));
  CHECK(depth_atomic(single, Point2{2, 4}).value.rational() == Rational(0));

  CHECK(depth_atomic(kTriangle, RatPoint(Rational(1, 3), Rational(1, 3))).value.rational() ==
        Rational(1));
  CHECK(depth_atomic(kTriangle, Point2{5, 5}).value.rational() == Rational(0));

  const Measure empty{};
  CHECK(depth(empty, {0, 0}).value.rational() == Rational(0));
}

TEST_CASE("atomic depth is attained and witnessed") {
  const DepthValue d = depth_atomic(kTriangle, Point2{0, 0});
  CHECK(d.value.rational() == Rational(1));
  CHECK(d.attained);
  REQUIRE(d.witness.has_value());
  // the witness flag reproduces the depth value
  CHECK(flag_mass(kTriangle, *d.witness).rational() == Rational(1));
}

TEST_CASE("flag enumeration matches the sweep exactly") {
  for (int i = 0; i < 40; ++i) {
    const Measure m = random_atomic_instance(9000 + i);
    for (int k = 0; k < 8; ++k) {
      const RatPoint p(Rational(k - 4, 3), Rational((k * 7) % 11 - 5, 2));
      CHECK(exact::atomic_depth(m.atoms(), p) == exact::atomic_flag_depth(m.atoms(), p));
    }
  }
}

TEST_CASE("disk-with-atom: no minimizing halfspace at (1,0), flag minimum attained") {
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  const double base = 1.0 / 3.0 - std::sqrt(3.0) / (4 * kPi);

  const DepthValue at_x = depth(m, {1, 0});
  CHECK(at_x.value.value() == doctest::Approx(base).epsilon(1e-9));
  CHECK_FALSE(at_x.attained);
  REQUIRE(at_x.witness.has_value());
  CHECK(at_x.witness->plane_normal().x == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(at_x.witness->ray_direction().y < 0.0);  // ray away from the atom

  const double alpha0 = (kPi - 2) / (4 * kPi);
  const DepthValue at_a = depth(m, {1, 1});
  CHECK(at_a.value.value() == doctest::Approx(alpha0 + 0.1).epsilon(1e-9));
  CHECK(at_a.attained);

  CHECK(depth(m, {0, 0}).value.value() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("cauchy pair depths at reference points") {
  const Measure mu = cauchy_cross_mu(2);
  const Measure nu = cauchy_cross_nu(2);
  CHECK(depth(mu, {0, 0}).value.value() == 0.5);
  CHECK(depth(nu, {0, 0}).value.value() == 0.5);
  CHECK(depth(mu, {1, 0}).value.value() == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(depth(nu, {1, 0}).value.value() == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("closed form for the cauchy pair") {
  CHECK(cauchy_cross_depth({0.0, 0.0}, 2) == 0.5);
  CHECK(cauchy_cross_depth({1.0, 0.0}, 2) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(cauchy_cross_depth({0.0, 0.0, 0.0, 0.0, 0.0}, 5) == 0.5);
  double prev = 1.0;
  for (double t = 0.5; t < 300; t *= 2) {
    const double v = cauchy_cross_depth({t, 0.3}, 2);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-2);
  CHECK_THROWS_AS(cauchy_cross_depth({1.0}, 2), std::invalid_argument);
}

TEST_CASE("depth vanishes along rays leaving the support") {
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  double prev = 1e9;
  for (double t = 2.0; t < 20; t += 1.5) {
    const double v = depth(m, {t * 0.6, t * 0.8}).value.value();
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
  CHECK(prev == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("adding a component never decreases depth") {
  const Measure base = kTriangle;
  std::vector<Component> comps = {base.components()[0], UniformDisk{{0.3, 0.3}, 1.5, 1.0}};
  const Measure more(std::move(comps));
  for (double x = -1; x <= 2; x += 0.5)
    for (double y = -1; y <= 2; y += 0.5) {
      const double d0 = depth(base, {x, y}).value.value();
      const double d1 = depth(more, {x, y}).value.value();
      CHECK(d1 >= d0 - 1e-12);
    }
}

TEST_CASE("depth is a lower bound for every halfspace through the point") {
  const Measure ms[2] = {disk_with_atom_measure(Rational(1, 10)), cauchy_cross_nu(2)};
  SplitMix64 rng(23);
  for (const Measure& m : ms) {
    for (int k = 0; k < 25; ++k) {
      const Point2 x{3 * rng.next_open01() - 1.5, 3 * rng.next_open01() - 1.5};
      const double d = depth(m, x).value.value();
      for (int j = 0; j < 16; ++j) {
        const double th = 2 * kPi * rng.next_open01();
        const Halfspace h = Halfspace::through(x, {std::cos(th), std::sin(th)});
        CHECK(d <= halfspace_mass(m, h).value() + 1e-9);
      }
    }
  }
}

TEST_CASE("mixture witness reproduces the reported value") {
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  SplitMix64 rng(29);
  for (int k = 0; k < 20; ++k) {
    const Point2 x{3 * rng.next_open01() - 1.5, 3 * rng.next_open01() - 1.5};
    const DepthValue d = depth(m, x);
    REQUIRE(d.witness.has_value());
    CHECK(flag_mass(m, *d.witness).value() == doctest::Approx(d.value.value()).epsilon(1e-9));
  }
}

TEST_CASE("depth_below is sound") {
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  SplitMix64 rng(31);
  for (int k = 0; k < 30; ++k) {
    const Point2 x{4 * rng.next_open01() - 2, 4 * rng.next_open01() - 2};
    const double d = depth(m, x).value.value();
    if (depth_below(m, x, 0.15)) CHECK(d < 0.15);
    if (!depth_below(m, x, 0.15)) CHECK(d >= 0.15 - 1e-7);
  }
}

TEST_CASE("depth_atomic rejects mixtures") {
  CHECK_THROWS_AS(depth_atomic(disk_with_atom_measure(Rational(1, 10)), Point2{0, 0}),
                  std::invalid_argument);
}
