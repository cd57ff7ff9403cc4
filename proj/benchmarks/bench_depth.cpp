#include "halfdepth/depth.hpp"
#include "halfdepth/oracle.hpp"
#include "halfdepth/reference_measures.hpp"
#include "halfdepth/regions.hpp"
#include "halfdepth/selfcheck.hpp"

#include <benchmark/benchmark.h>

using namespace halfdepth;

namespace {

Measure instance_of_size(int n) {
  // pull from the deterministic generator until the atom count matches
  for (std::uint64_t seed = 1;; ++seed) {
    Measure m = random_atomic_instance(seed, n, std::max(5, n / 2));
    if (static_cast<int>(m.atoms().size()) == n) return m;
  }
}

void BM_atomic_depth_sweep(benchmark::State& state) {
  const Measure m = instance_of_size(static_cast<int>(state.range(0)));
  const RatPoint x(Rational(1, 3), Rational(-1, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::atomic_depth(m.atoms(), x));
  }
}
BENCHMARK(BM_atomic_depth_sweep)->Arg(4)->Arg(8)->Arg(12);

void BM_atomic_depth_bruteforce(benchmark::State& state) {
  const Measure m = instance_of_size(static_cast<int>(state.range(0)));
  const RatPoint x(Rational(1, 3), Rational(-1, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_depth_atomic(m.atoms(), x));
  }
}
BENCHMARK(BM_atomic_depth_bruteforce)->Arg(4)->Arg(8)->Arg(12);

void BM_mixture_depth(benchmark::State& state) {
  const Measure m = disk_with_atom_measure(Rational(1, 10));
  DepthOptions opts;
  opts.coarse_angles = static_cast<int>(state.range(0));
  const Point2 x{0.7, -0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(depth(m, x, opts).value.value());
  }
}
BENCHMARK(BM_mixture_depth)->Arg(256)->Arg(1024)->Arg(2048);

void BM_flag_mass(benchmark::State& state) {
  const Measure m = cauchy_cross_mu(2);
  const FlagHalfspace2D f = FlagHalfspace2D::make({0.5, 0.25}, {0.6, 0.8}, +1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flag_mass(m, f).value());
  }
}
BENCHMARK(BM_flag_mass);

void BM_region_atomic(benchmark::State& state) {
  const Measure m = instance_of_size(static_cast<int>(state.range(0)));
  const std::vector<Rational> levels = achieved_levels(m);
  const Rational alpha = levels.size() > 1 ? levels[1] : Rational(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(central_region_atomic(m, alpha).empty());
  }
}
BENCHMARK(BM_region_atomic)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
