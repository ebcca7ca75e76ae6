#pragma once

#include "bnsr/direction.hpp"
#include "bnsr/group.hpp"
#include "bnsr/sphere.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bnsr::checks {

// ---- independent oracles -------------------------------------------------

/// Primitive integer vectors x with |x_i| <= bound and <x, f> <= 0 for every f.
std::vector<Direction> brute_force_cone_points(const std::vector<Direction>& normals, int m, int bound);

/// Orbit count of Z^k acting on (Z/N)^k by translation through the columns of 1 - F:
/// the twisted classes of F read off a finite quotient that the image contains.
std::size_t twisted_class_count_oracle(const SmallMatrix& f, std::int64_t modulus);

/// Product of signed permutation and elementary matrices, entries bounded by `bound`.
SmallMatrix random_unimodular(std::mt19937_64& rng, int k, int bound);

/// Random single-factor set of the given rank (empty, full, points, cofinite).
SphereSet random_factor_set(std::mt19937_64& rng, int rank);

/// Direct product of 1..3 random catalog atoms, occasionally a free product.
GroupExpr random_group_expr(std::mt19937_64& rng);

/// All primitive vectors in dimension m with entries in [-bound, bound].
std::vector<Direction> lattice_directions(int m, int bound);

// ---- reporting -----------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// The ten acceptance criteria, in order.
std::vector<CheckResult> run_acceptance();
CheckResult acceptance(int id);

/// Worked examples of every module, replayed against fixed expected values.
std::vector<CheckResult> run_golden();

}  // namespace bnsr::checks
