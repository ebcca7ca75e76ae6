#include "bnsr/omega.hpp"

namespace bnsr {

SphereSet omega_from_sigma_complement(const SphereSet& complement, int m) {
  if (complement.dim() != m)
    throw AmbientMismatch("omega_from_sigma: set lives in R^" + std::to_string(complement.dim()) +
                          ", expected R^" + std::to_string(m));
  const Decomposition flat = Decomposition::single(m);
  if (complement.is_empty()) return SphereSet::full(flat);
  if (is_full(complement)) return SphereSet::empty(flat);

  const Cardinality c = cardinality(complement);
  if (c.kind != Cardinality::Kind::Finite)
    throw UnsupportedSigma("omega_from_sigma: complement of Sigma is neither finite, full nor empty");

  const ConeShape shape = cone_rays(RationalCone(m, c.points));
  switch (shape.kind) {
    case ConeShape::Kind::Trivial: return SphereSet::empty(flat);
    case ConeShape::Kind::SingleRay: return SphereSet::points(m, {*shape.direction});
    case ConeShape::Kind::Line:
      return SphereSet::points(m, {*shape.direction, -*shape.direction});
    case ConeShape::Kind::HigherDimensional: break;
  }
  return SphereSet(flat, {{Part::cone(c.points)}});
}

SphereSet omega_from_sigma(const SphereSet& sigma, int m) {
  if (sigma.dim() != m)
    throw AmbientMismatch("omega_from_sigma: set lives in R^" + std::to_string(sigma.dim()) +
                          ", expected R^" + std::to_string(m));
  if (sigma.is_empty()) return SphereSet::empty(Decomposition::single(m));
  if (is_full(sigma)) return SphereSet::full(Decomposition::single(m));
  if (sigma.ambient().factors() != 1 || sigma.has_cone_parts())
    throw UnsupportedSigma("omega_from_sigma: Sigma must be full, empty or cofinite on one factor");
  return omega_from_sigma_complement(complement(sigma), m);
}

std::optional<SphereSet> omega_of_product(const std::vector<std::optional<SphereSet>>& factors) {
  if (factors.empty()) throw std::invalid_argument("omega_of_product: no factors");
  for (const auto& f : factors)
    if (!f) return std::nullopt;
  SphereSet acc = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = join(acc, *factors[i]);
  return acc;
}

std::optional<SphereSet> sigma1_complement_of_product(
    const std::vector<std::optional<SphereSet>>& factors) {
  if (factors.empty()) throw std::invalid_argument("sigma1_complement_of_product: no factors");
  for (const auto& f : factors)
    if (!f) return std::nullopt;
  SphereSet acc = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const SphereSet& b = *factors[i];
    acc = unite(join(acc, SphereSet::empty(b.ambient())), join(SphereSet::empty(acc.ambient()), b));
  }
  return acc;
}

Finite12Report check_finite12(const SphereSet& omega) {
  Finite12Report r;
  const Cardinality c = cardinality(omega);
  r.kind = c.kind;
  r.count = c.count();
  if (c.kind != Cardinality::Kind::Finite) return r;
  if (c.count() == 2) {
    r.antipodal = c.points[0] == -c.points[1];
    if (!r.antipodal) {
      r.ok = false;
      r.message = "two points " + c.points[0].str() + ", " + c.points[1].str() + " are not antipodal";
    }
  } else if (c.count() != 1) {
    r.ok = false;
    r.message = "finite Omega with " + std::to_string(c.count()) + " points";
  }
  return r;
}

OClass classify_O(const GroupExpr& g, int k) {
  if (k < 1) throw std::invalid_argument("classify_O: level must be >= 1");
  return lookup_invariants(g, k).o_class(k);
}

std::optional<int> monotonicity_violation(const KnownInvariants& inv) {
  for (const auto& [n, fact] : inv.omega) {
    auto next = inv.omega.find(n + 1);
    if (next == inv.omega.end() || !fact.set || !next->second.set) continue;
    if (subset(*next->second.set, *fact.set) == std::optional<bool>(false)) return n;
  }
  return std::nullopt;
}

}  // namespace bnsr
