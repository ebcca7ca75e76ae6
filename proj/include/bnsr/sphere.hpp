#pragma once

#include "bnsr/cone.hpp"
#include "bnsr/direction.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnsr {

/// Orthogonal split of R^m into coordinate blocks. A block of rank r carries
/// the factor sphere S^{r-1}; rank 0 blocks carry the empty sphere.
struct Decomposition {
  std::vector<int> ranks;

  Decomposition() = default;
  explicit Decomposition(std::vector<int> r);
  static Decomposition single(int rank) { return Decomposition({rank}); }

  int dim() const;
  int offset(std::size_t factor) const;
  std::size_t factors() const { return ranks.size(); }

  friend Decomposition concat(const Decomposition& a, const Decomposition& b);
  bool operator==(const Decomposition&) const = default;
};

/// One factor's contribution to a join atom.
struct Part {
  enum class Kind { Empty, Full, Points, Cofinite, Cone };
  Kind kind = Kind::Empty;
  std::vector<Direction> points;  // Points: members; Cofinite: excluded; Cone: normals

  static Part empty() { return {}; }
  static Part full() { return {Kind::Full, {}}; }
  static Part finite(std::vector<Direction> pts) { return {Kind::Points, std::move(pts)}; }
  static Part cofinite(std::vector<Direction> excluded) {
    return {Kind::Cofinite, std::move(excluded)};
  }
  static Part cone(std::vector<Direction> normals) { return {Kind::Cone, std::move(normals)}; }

  bool is_empty() const { return kind == Kind::Empty; }
  bool contains(const Direction& d) const;

  bool operator==(const Part&) const = default;
};

using JoinAtom = std::vector<Part>;

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedComplement : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Subset of S^{m-1}: a union of iterated spherical joins of per-factor parts.
/// Always held in normal form: canonical parts, no all-empty atoms, no
/// duplicates, no atom contained in another.
class SphereSet {
 public:
  SphereSet(Decomposition ambient, std::vector<JoinAtom> atoms);

  static SphereSet empty(Decomposition ambient);
  static SphereSet full(Decomposition ambient);
  /// Single-factor constructors.
  static SphereSet points(int rank, std::vector<Direction> pts);
  static SphereSet cofinite(int rank, std::vector<Direction> excluded);
  static SphereSet full_sphere(int rank) { return full(Decomposition::single(rank)); }
  static SphereSet empty_sphere(int rank) { return empty(Decomposition::single(rank)); }

  const Decomposition& ambient() const { return ambient_; }
  const std::vector<JoinAtom>& atoms() const { return atoms_; }
  int dim() const { return ambient_.dim(); }
  bool is_empty() const { return atoms_.empty(); }
  bool has_cone_parts() const;

  /// Structural identity of normal forms. Use `equivalent` for set equality.
  bool operator==(const SphereSet&) const = default;

 private:
  Decomposition ambient_;
  std::vector<JoinAtom> atoms_;
};

struct Cardinality {
  enum class Kind { Zero, Finite, Infinite };
  Kind kind = Kind::Zero;
  std::vector<Direction> points;  // ambient coordinates, sorted; Finite only

  std::size_t count() const { return points.size(); }
  bool is_finite_nonempty() const { return kind == Kind::Finite; }
};

SphereSet join(const SphereSet& a, const SphereSet& b);
SphereSet complement(const SphereSet& a);
SphereSet unite(const SphereSet& a, const SphereSet& b);
std::vector<Direction> intersect_with_finite(const SphereSet& a, const std::vector<Direction>& f);
Cardinality cardinality(const SphereSet& a);
bool member(const Direction& d, const SphereSet& a);
/// Requires cardinality Finite(2).
bool is_antipodal_pair(const SphereSet& a);

/// Exact containment test. Empty optional when cone parts make it undecided.
std::optional<bool> subset(const SphereSet& a, const SphereSet& b);
std::optional<bool> equivalent(const SphereSet& a, const SphereSet& b);
bool is_full(const SphereSet& a);

/// Reorders factor blocks: new factor i is old factor perm[i].
SphereSet permute_factors(const SphereSet& a, const std::vector<std::size_t>& perm);
/// Places a factor-block direction into ambient coordinates (zeros elsewhere).
Direction embed(const Direction& d, const Decomposition& ambient, std::size_t factor);
/// Component of an ambient direction inside one factor block (may be zero).
SmallVector block(const SmallVector& x, const Decomposition& ambient, std::size_t factor);

std::string describe(const SphereSet& a);
const char* to_string(Cardinality::Kind k);

}  // namespace bnsr
