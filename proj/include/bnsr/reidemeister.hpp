#pragma once

#include "bnsr/finite_group.hpp"
#include "bnsr/integer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnsr {

/// A Reidemeister number: finite value or infinity.
struct RValue {
  std::optional<BigInt> finite;  // empty means infinite

  static RValue infinity() { return {}; }
  static RValue of(BigInt v) { return {std::move(v)}; }
  bool is_infinite() const { return !finite; }
  std::string str() const { return finite ? finite->str() : "inf"; }
  bool operator==(const RValue&) const = default;
};

class InvalidAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Automorphism of Z^k + (+)_i Z/d_i acting on column vectors by
///   [ F   0 ]
///   [ Mix T ]
/// so column j is the image of generator j. T acts modulo the torsion factors.
struct FGAbelianAutomorphism {
  IntMatrix free_part;                // k x k, det +-1
  std::vector<BigInt> torsion_factors;  // d_i >= 2
  IntMatrix torsion_part;             // t x t
  IntMatrix mixing;                   // t x k

  static FGAbelianAutomorphism on_free(IntMatrix f);

  Eigen::Index free_rank() const { return free_part.rows(); }
  Eigen::Index torsion_count() const { return static_cast<Eigen::Index>(torsion_factors.size()); }
  IntMatrix block_matrix() const;

  /// Throws InvalidAutomorphism naming the failed condition.
  void validate() const;
};

/// #Coker(1 - Phi) on the group presented as Z^{k+t} / diag(0..0, d_1..d_t).
RValue reidemeister_number(const FGAbelianAutomorphism& phi);

/// Torsion-free only: true iff 1 is not an eigenvalue of the free part.
bool fixed_subgroup_trivial(const FGAbelianAutomorphism& phi);

struct TwistedClasses {
  std::size_t count = 0;
  std::vector<int> representatives;  // least element of each class, ascending
  std::vector<int> class_of;         // element -> index into representatives
};

/// Orbits of alpha -> sigma * alpha * phi(sigma)^-1 by union-find.
TwistedClasses brute_force_twisted_classes(const FiniteGroupTable& g, const std::vector<int>& phi);

/// (1/|G|) * sum of centralizer orders.
std::size_t conjugacy_class_count(const FiniteGroupTable& g);

/// Orbits of alpha -> alpha + c_i on (Z/N)^k for the columns c_i of `images`.
std::size_t orbit_count_mod(const SmallMatrix& images, std::int64_t modulus);

/// 1 -> A -> B -> C -> 1 with automorphisms phi_a, phi_b, phi_c.
struct ExtensionData {
  FiniteGroupTable a, b, c;
  std::vector<int> inclusion;   // A -> B
  std::vector<int> projection;  // B -> C
  std::vector<int> phi_a, phi_b, phi_c;
};

/// Builds A = subgroup, C = B / A and the induced automorphisms. Throws when
/// the subgroup is not normal or not phi-invariant.
ExtensionData extension_from_subgroup(const FiniteGroupTable& b, const std::vector<int>& subgroup,
                                      const std::vector<int>& phi_b);

struct ExtensionReport {
  bool valid = false;
  bool central = false;
  std::string problem;  // first violated condition when !valid
  std::size_t r_kernel = 0, r_total = 0, r_quotient = 0;
  bool product_holds = false;
  /// Number of phi-classes of B over each phibar-class of C.
  std::vector<std::size_t> fiber_counts;
};

ExtensionReport verify_central_extension(const ExtensionData& ext);

}  // namespace bnsr
