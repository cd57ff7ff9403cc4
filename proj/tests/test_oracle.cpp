#include "halfdepth/oracle.hpp"

#include "halfdepth/reference_measures.hpp"
#include "halfdepth/selfcheck.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace halfdepth;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("brute force agrees with the sweep on random instances") {
  for (int i = 0; i < 60; ++i) {
    const Measure m = random_atomic_instance(3000 + i);
    for (int k = 0; k < 10; ++k) {
      const RatPoint p(Rational(((i * 7 + k * 3) % 23) - 11, 2),
                       Rational(((i * 5 + k * 11) % 19) - 9, 3));
      CHECK(brute_force_depth_atomic(m.atoms(), p) == exact::atomic_depth(m.atoms(), p));
    }
  }
}

TEST_CASE("brute force basics") {
  FiniteAtomic fa;
  fa.atoms = {{{1, 2}, Rational(4)}};
  std::vector<Component> comps = {std::move(fa)};
  const Measure single(std::move(comps));
  CHECK(brute_force_depth_atomic(single, {1, 2}) == Rational(4));
  const Measure empty{};
  CHECK(brute_force_depth_atomic(empty, {0, 0}) == Rational(0));
}

TEST_CASE("monte carlo validates the disk segment closed form") {
  const Component disk = UniformDisk{{0, 0}, 2.0, 1.0};
  const Halfspace h({1, 0}, std::sqrt(2.0));
  const MonteCarloEstimate est = monte_carlo_mass(disk, h, 100000, 4242);
  const double expect = (kPi - 2) / (4 * kPi);  // ~0.090845
  CHECK(std::abs(est.estimate - expect) <= 3 * est.std_error);
  CHECK(est.std_error < 2e-3);
}

TEST_CASE("monte carlo validates the cauchy tail") {
  const Component cp = CauchyProduct{2, {0, 0}, 1.0};
  const MonteCarloEstimate est = monte_carlo_mass(cp, Halfspace({1, 0}, 1.0), 100000, 777);
  CHECK(std::abs(est.estimate - 0.25) <= 3 * est.std_error);
}

TEST_CASE("monte carlo on a flag region") {
  // flag with the halfplane covering everything: every sample lands inside
  const Component disk = UniformDisk{{0, 0}, 1.0, 1.0};
  const FlagHalfspace2D all({-5, 0}, {1, 0}, {0, 1});
  const MonteCarloEstimate est = monte_carlo_mass(disk, all, 20000, 1);
  CHECK(est.estimate == 1.0);
  CHECK(est.hits == est.samples);
}

TEST_CASE("monte carlo is deterministic given the seed") {
  const Component disk = UniformDisk{{0.5, -0.25}, 1.5, 1.0};
  const Halfspace h = Halfspace::through({0.6, 0.0}, {0.3, 1.0});
  const MonteCarloEstimate a = monte_carlo_mass(disk, h, 50000, 99);
  const MonteCarloEstimate b = monte_carlo_mass(disk, h, 50000, 99);
  CHECK(a.estimate == b.estimate);
  CHECK(a.hits == b.hits);
  const MonteCarloEstimate c = monte_carlo_mass(disk, h, 50000, 100);
  CHECK(a.hits != c.hits);
}

TEST_CASE("monte carlo rejects bad inputs") {
  const Component disk = UniformDisk{{0, 0}, 1.0, 1.0};
  CHECK_THROWS_AS(monte_carlo_mass(disk, Halfspace({1, 0}, 0.0), 0, 1), std::invalid_argument);
  FiniteAtomic fa;
  fa.atoms = {{{0, 0}, Rational(1)}};
  CHECK_THROWS_AS(monte_carlo_mass(Component(fa), Halfspace({1, 0}, 0.0), 10, 1),
                  std::invalid_argument);
}

TEST_CASE("depth field matches the closed form and is order-invariant") {
  const Measure nu = cauchy_cross_nu(2);
  const BBox bbox{{-3, -3}, {3, 3}};
  const DepthField f = depth_field(nu, bbox, 21, 21);
  double worst = 0.0;
  for (int iy = 0; iy < 21; ++iy)
    for (int ix = 0; ix < 21; ++ix)
      worst = std::max(worst, std::abs(f.at(ix, iy) - cauchy_cross_depth(f.node(ix, iy))));
  CHECK(worst < 1e-6);

  const DepthField again = depth_field(nu, bbox, 21, 21);
  CHECK(f.values == again.values);  // purity: identical results on re-evaluation
}

TEST_CASE("depth field of an atomic measure attains only achieved levels") {
  FiniteAtomic fa;
  fa.atoms = {{{0, 0}, Rational(1)}, {{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}};
  std::vector<Component> comps = {std::move(fa)};
  const Measure tri(std::move(comps));
  const DepthField f = depth_field(tri, {{-1, -1}, {2, 2}}, 16, 16);
  for (double v : f.values) CHECK((v == 0.0 || v == 1.0));
}

TEST_CASE("depth field rejects degenerate input") {
  const Measure nu = cauchy_cross_nu(2);
  CHECK_THROWS_AS(depth_field(nu, {{0, 0}, {0, 1}}, 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(depth_field(nu, {{-1, -1}, {1, 1}}, 1, 8), std::invalid_argument);
}

TEST_CASE("field export round trip") {
  const Measure nu = cauchy_cross_nu(2);
  DepthField f = depth_field(nu, {{-1, -1}, {1, 1}}, 4, 3);
  write_depth_field_csv(f, "/tmp/halfdepth_field_test.csv");
  std::ifstream in("/tmp/halfdepth_field_test.csv");
  std::string line;
  int rows = 0, commas = 0;
  while (std::getline(in, line)) {
    ++rows;
    commas = static_cast<int>(std::count(line.begin(), line.end(), ','));
  }
  CHECK(rows == 3);
  CHECK(commas == 3);
  const std::string sidecar = depth_field_sidecar(f);
  CHECK(sidecar.find("spec_hash") != std::string::npos);
  CHECK(sidecar.find("resolution") != std::string::npos);
}
