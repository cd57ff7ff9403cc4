#pragma once

#include "halfdepth/measure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace halfdepth {

/// One verification line: a named check, its outcome, and a short detail
/// string (max errors, counts, elapsed time).
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckSummary {
  std::vector<CheckLine> lines;

  bool ok() const {
    for (const CheckLine& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

/// Deterministic random instance: 1..max_atoms atoms at distinct integer
/// coordinates in [-coord_range, coord_range]^2 with integer weights in
/// [1, max_weight]. Identical across platforms (splitmix64-based).
Measure random_atomic_instance(std::uint64_t seed, int max_atoms = 12, int coord_range = 5,
                               int max_weight = 5);

/// Sweep == flag enumeration == brute force, exact rational equality, over
/// random instances and query points (atoms, lattice and off-lattice points).
CheckLine check_flag_sweep_bruteforce_equivalence(int instances, int points_per_instance,
                                                  std::uint64_t seed);

/// Beyond every atom, seen from every deeper point, the depth drops by at
/// least the atom mass: depth(y) <= depth(x) - mu({x}), exact.
CheckLine check_depth_drop_inequality(int instances, std::uint64_t seed);

/// Every atom is a vertex of the exact central region at levels sampled in
/// (depth(atom) - mass, depth(atom)].
CheckLine check_atom_vertex_incidence(int instances, std::uint64_t seed);

/// Round trip: random instances (n <= 8) are recovered exactly -- locations
/// and rational weights -- from their depth oracles.
CheckLine check_atomic_roundtrip(int instances, std::uint64_t seed);

/// Disk and Cauchy closed-form halfspace masses match Monte Carlo (fixed
/// seeds, n = 1e5) within three standard errors, 100 randomized cases.
CheckLine check_mass_closed_forms_mc(std::uint64_t seed);

/// The two bundled Cauchy measures have identical engine depths matching the
/// closed form within tol on a grid_n x grid_n grid over [-3,3]^2, and the
/// value at the origin is exactly 1/2.
CheckLine check_cross_depth_identity(int grid_n = 61, double tol = 1e-6);

/// From depth access only, the disk-with-atom pipeline reports exactly one
/// confident atom candidate at (1,1) within 1e-3 in location and mass.
CheckLine check_disk_atom_recovery(double delta = 0.1);

/// Approximated central regions of the disk-with-atom measure match the
/// analytic shapes (disk / hull / clipped hull) within Hausdorff 1e-4 at five
/// levels per band.
CheckLine check_disk_atom_regions(double delta = 0.1);

/// Negative control on the Cauchy pair: no confident candidates, the median
/// is flagged undecidable, and the depth contours stay far from both true
/// supports (which therefore cannot be inferred).
CheckLine check_cross_negative_control();

/// The full acceptance sequence in order.
CheckSummary run_acceptance_suite(std::uint64_t seed = 20240901);

/// The randomized-property subset (equivalences, inequalities, round trips,
/// Monte Carlo validation).
CheckSummary run_property_suite(std::uint64_t seed = 20240901);

}  // namespace halfdepth
