#pragma once

#include "bnsr/group.hpp"
#include "bnsr/sphere.hpp"

#include <map>
#include <optional>
#include <string>

namespace bnsr {

inline constexpr int kDefaultLevels = 3;

/// Membership class by number of (rational) points of Omega^k.
enum class OClass { O0, O1, O2, Other, Unknown };

const char* to_string(OClass c);

/// Omega^n of one group. `set` may be absent while the cardinality is still
/// known to be infinite.
struct LevelFact {
  std::optional<SphereSet> set;
  bool infinite = false;
  std::string provenance;

  bool known() const { return set.has_value(); }
  bool known_infinite() const;
  OClass o_class() const;
};

struct KnownInvariants {
  int hom_rank = 0;
  int finiteness_type = 0;  // INT_MAX for F_infinity
  std::optional<SphereSet> sigma1_complement;
  std::string sigma1_provenance;
  std::map<int, LevelFact> omega;  // levels 1..max_level
  std::optional<std::string> rinf_citation;

  const LevelFact& omega_at(int n) const;
  OClass o_class(int k) const { return omega_at(k).o_class(); }
};

/// Catalog facts for atoms, derived facts (product formulas) for products.
/// Unknown stays unknown.
KnownInvariants lookup_invariants(const GroupExpr& g, int max_level = kDefaultLevels);

/// Atoms whose stored Sigma^1 complement and Omega^1 were entered separately.
bool omega1_is_catalog_entry(const GroupAtom& a);

}  // namespace bnsr
