#include "bnsr/catalog.hpp"

#include "bnsr/omega.hpp"

#include <algorithm>
#include <numeric>

namespace bnsr {

const char* to_string(OClass c) {
  switch (c) {
    case OClass::O0: return "O0";
    case OClass::O1: return "O1";
    case OClass::O2: return "O2";
    case OClass::Other: return "Other";
    case OClass::Unknown: return "Unknown";
  }
  return "?";
}

bool LevelFact::known_infinite() const {
  return infinite || (set && cardinality(*set).kind == Cardinality::Kind::Infinite);
}

OClass LevelFact::o_class() const {
  if (!set) return infinite ? OClass::Other : OClass::Unknown;
  const Cardinality c = cardinality(*set);
  switch (c.kind) {
    case Cardinality::Kind::Zero: return OClass::O0;
    case Cardinality::Kind::Infinite: return OClass::Other;
    case Cardinality::Kind::Finite:
      return c.count() == 1 ? OClass::O1 : c.count() == 2 ? OClass::O2 : OClass::Other;
  }
  return OClass::Unknown;
}

const LevelFact& KnownInvariants::omega_at(int n) const {
  auto it = omega.find(n);
  if (it == omega.end())
    throw std::out_of_range("Omega^" + std::to_string(n) + " was not looked up");
  return it->second;
}

namespace {

using K = GroupAtom::Kind;

LevelFact fact(SphereSet s, std::string why) { return {std::move(s), false, std::move(why)}; }
LevelFact unknown(std::string why) { return {std::nullopt, false, std::move(why)}; }

SmallVector lambda_char(int n) {
  SmallVector v = SmallVector::Zero(n);
  v(0) = -1;
  return v;
}

SmallVector rho_char(int n) { return SmallVector::Ones(n); }

bool omega_all_levels(const GroupAtom& a) {
  switch (a.kind) {
    case K::FreeAbelian:
    case K::Free:
    case K::BaumslagSolitar:
    case K::KleinBottle:
    case K::FiniteCyclic:
    case K::FiniteTable: return true;
    default: return false;
  }
}

KnownInvariants atom_invariants(const GroupAtom& a, int max_level) {
  KnownInvariants inv;
  inv.hom_rank = hom_rank(GroupExpr(a));
  inv.finiteness_type = a.finiteness_type();
  const int m = inv.hom_rank;
  const Decomposition amb = Decomposition::single(m);
  const std::string tag = "CatalogFact: " + a.name();

  std::optional<SphereSet> sigc, omega1;
  switch (a.kind) {
    case K::FreeAbelian:
    case K::FiniteCyclic:
    case K::FiniteTable:
      sigc = SphereSet::empty(amb);
      omega1 = SphereSet::full(amb);
      break;
    case K::Free:
      sigc = SphereSet::full(amb);
      omega1 = SphereSet::empty(amb);
      inv.rinf_citation = "free groups of rank >= 2 (Levitt-Lustig; Dekimpe-Goncalves)";
      break;
    case K::BaumslagSolitar:
      sigc = SphereSet::points(1, {Direction{-1}});
      omega1 = SphereSet::points(1, {Direction{1}});
      break;
    case K::KleinBottle:
    case K::Braid:
      sigc = SphereSet::empty(amb);
      omega1 = SphereSet::points(1, {Direction{1}, Direction{-1}});
      if (a.kind == K::KleinBottle) inv.rinf_citation = "Klein bottle group (Goncalves-Wong)";
      break;
    case K::ThompsonF:
      sigc = SphereSet::points(2, {Direction{-1, 0}, Direction{1, 1}});
      inv.rinf_citation = "Thompson's group F (Bleak-Fel'shtyn-Goncalves)";
      break;
    case K::GeneralizedThompson:
      sigc = SphereSet::points(m, {Direction(lambda_char(m)), Direction(rho_char(m))});
      inv.rinf_citation = "generalized Thompson groups F_{n,0} (Goncalves-Kochloukova)";
      break;
    case K::Lamplighter:
      sigc = SphereSet::full(amb);
      omega1 = SphereSet::empty(amb);
      if (std::gcd(a.param, 6) > 1)
        inv.rinf_citation = "lamplighter Z/n wr Z with gcd(n,6) > 1 (Goncalves-Wong)";
      break;
  }
  inv.sigma1_complement = sigc;
  inv.sigma1_provenance = tag;

  for (int n = 1; n <= max_level; ++n) {
    if (n > inv.finiteness_type) {
      inv.omega[n] = unknown("Unknown: " + a.name() + " is not of type F_" + std::to_string(n));
      continue;
    }
    const bool thompson = a.kind == K::ThompsonF || a.kind == K::GeneralizedThompson;
    if (n == 1 && thompson) {
      inv.omega[n] = fact(omega_from_sigma_complement(*sigc, m), "ThmOmegaFromSigma");
    } else if (n == 1 || omega_all_levels(a)) {
      inv.omega[n] = fact(*omega1, tag);
    } else if (thompson) {
      inv.omega[n] = {std::nullopt, true, tag + " (Omega^n infinite for all n)"};
    } else {
      inv.omega[n] = unknown("Unknown: no catalog entry for Omega^" + std::to_string(n));
    }
  }
  return inv;
}

bool is_free_group_like(const GroupExpr& g) {
  if (!g.is_atom()) return false;
  const GroupAtom& a = g.atom();
  return a.kind == K::Free || (a.kind == K::FreeAbelian && a.param == 1);
}

// Klein x Z^k, k >= 0, in any factor order.
bool klein_times_free_abelian(const GroupExpr& g) {
  if (g.is_atom()) return g.atom().kind == K::KleinBottle;
  if (g.node() != GroupExpr::Node::DirectProduct) return false;
  int klein = 0;
  for (const auto& f : g.factors()) {
    if (!f.is_atom()) return false;
    if (f.atom().kind == K::KleinBottle)
      ++klein;
    else if (f.atom().kind != K::FreeAbelian)
      return false;
  }
  return klein == 1;
}

}  // namespace

bool omega1_is_catalog_entry(const GroupAtom& a) {
  return a.kind != K::ThompsonF && a.kind != K::GeneralizedThompson;
}

KnownInvariants lookup_invariants(const GroupExpr& g, int max_level) {
  if (max_level < 1) throw std::invalid_argument("lookup_invariants: max_level must be >= 1");
  if (g.is_atom()) return atom_invariants(g.atom(), max_level);

  std::vector<KnownInvariants> parts;
  for (const auto& f : g.factors()) parts.push_back(lookup_invariants(f, max_level));

  KnownInvariants inv;
  inv.hom_rank = hom_rank(g);
  inv.finiteness_type = g.finiteness_type();
  const int m = inv.hom_rank;

  if (g.node() == GroupExpr::Node::FreeProduct) {
    inv.sigma1_complement = SphereSet::full(Decomposition::single(m));
    inv.sigma1_provenance = "FreeProductSigma";
    for (int n = 1; n <= max_level; ++n) {
      if (n > inv.finiteness_type)
        inv.omega[n] = unknown("Unknown: free product is not of type F_" + std::to_string(n));
      else
        inv.omega[n] = fact(omega_from_sigma_complement(*inv.sigma1_complement, m),
                            "FreeProductSigma; ThmOmegaFromSigma");
    }
    if (std::all_of(g.factors().begin(), g.factors().end(), is_free_group_like) && m >= 2)
      inv.rinf_citation = "free product of free groups is free of rank " + std::to_string(m) +
                          " (Levitt-Lustig; Dekimpe-Goncalves)";
    return inv;
  }

  std::vector<std::optional<SphereSet>> sig;
  for (const auto& p : parts) sig.push_back(p.sigma1_complement);
  inv.sigma1_complement = sigma1_complement_of_product(sig);
  inv.sigma1_provenance = inv.sigma1_complement ? "ThmProductFormula (Sigma^1 complement)"
                                                : "Unknown: a factor's Sigma^1 is unknown";

  for (int n = 1; n <= max_level; ++n) {
    std::vector<std::optional<SphereSet>> om;
    bool any_infinite = false;
    for (const auto& p : parts) {
      const LevelFact& lf = p.omega_at(n);
      om.push_back(lf.set);
      any_infinite = any_infinite || lf.known_infinite();
    }
    auto joined = omega_of_product(om);
    if (joined)
      inv.omega[n] = fact(*joined, "ThmProductFormula (join of factor Omega^" + std::to_string(n) + ")");
    else if (any_infinite)
      inv.omega[n] = {std::nullopt, true, "ThmProductFormula (a factor has infinite Omega^" +
                                              std::to_string(n) + ")"};
    else
      inv.omega[n] = unknown("Unknown: a factor's Omega^" + std::to_string(n) + " is unknown");
  }
  if (klein_times_free_abelian(g)) inv.rinf_citation = "Klein bottle group times Z^k (Goncalves-Wong)";
  return inv;
}

}  // namespace bnsr
