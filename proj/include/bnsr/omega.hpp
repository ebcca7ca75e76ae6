#pragma once

#include "bnsr/catalog.hpp"
#include "bnsr/sphere.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnsr {

class UnsupportedSigma : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Omega from Sigma: e is in Omega iff <e,f> <= 0 for every f outside Sigma.
/// Sigma must be full, empty, or have a finite complement. The result lives
/// on Decomposition::single(m).
SphereSet omega_from_sigma(const SphereSet& sigma, int m);

/// Same, starting from the complement F of Sigma (full, empty or finite).
SphereSet omega_from_sigma_complement(const SphereSet& complement, int m);

/// Iterated join of the factor Omega sets; empty when some factor is unknown.
std::optional<SphereSet> omega_of_product(const std::vector<std::optional<SphereSet>>& factors);

/// Union of the embedded factor complements (Sigma^0 complements are empty
/// for finitely generated groups).
std::optional<SphereSet> sigma1_complement_of_product(
    const std::vector<std::optional<SphereSet>>& factors);

struct Finite12Report {
  bool ok = true;
  Cardinality::Kind kind = Cardinality::Kind::Zero;
  std::size_t count = 0;
  bool antipodal = false;
  std::string message;
};

/// A finite non-empty Omega has one point or two antipodal points.
Finite12Report check_finite12(const SphereSet& omega);

OClass classify_O(const GroupExpr& g, int k);

/// Omega^n contains Omega^{n+1} for every pair of consecutive known levels.
/// Returns the first offending level, if any.
std::optional<int> monotonicity_violation(const KnownInvariants& inv);

}  // namespace bnsr
