#include "bnsr/sphere.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bnsr {

// ---------------------------------------------------------------- Decomposition

Decomposition::Decomposition(std::vector<int> r) : ranks(std::move(r)) {
  if (ranks.empty()) throw std::invalid_argument("Decomposition: needs at least one factor");
  for (int k : ranks)
    if (k < 0) throw std::invalid_argument("Decomposition: negative factor rank");
}

int Decomposition::dim() const { return std::accumulate(ranks.begin(), ranks.end(), 0); }

int Decomposition::offset(std::size_t factor) const {
  return std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(factor), 0);
}

Decomposition concat(const Decomposition& a, const Decomposition& b) {
  std::vector<int> r = a.ranks;
  r.insert(r.end(), b.ranks.begin(), b.ranks.end());
  return Decomposition(std::move(r));
}

// ---------------------------------------------------------------- Part

bool Part::contains(const Direction& d) const {
  switch (kind) {
    case Kind::Empty: return false;
    case Kind::Full: return true;
    case Kind::Points: return std::binary_search(points.begin(), points.end(), d);
    case Kind::Cofinite: return !std::binary_search(points.begin(), points.end(), d);
    case Kind::Cone:
      for (const auto& f : points)
        if (dot(f.coords(), d.coords()) > 0) return false;
      return true;
  }
  return false;
}

namespace {

std::vector<Direction> both_poles() { return {Direction{-1}, Direction{1}}; }

Part canonical_part(Part p, int rank) {
  for (const auto& d : p.points)
    if (d.dim() != rank)
      throw std::invalid_argument("SphereSet: point " + d.str() + " does not live in a rank " +
                                  std::to_string(rank) + " factor");
  if (rank == 0) return Part::empty();
  p.points = canonical_points(std::move(p.points));

  switch (p.kind) {
    case Part::Kind::Empty: return Part::empty();
    case Part::Kind::Points:
      return p.points.empty() ? Part::empty() : p;
    case Part::Kind::Full:
      return rank == 1 ? Part::finite(both_poles()) : Part::full();
    case Part::Kind::Cofinite: {
      if (rank == 1) {
        std::vector<Direction> keep;
        for (const auto& d : both_poles())
          if (!std::binary_search(p.points.begin(), p.points.end(), d)) keep.push_back(d);
        return keep.empty() ? Part::empty() : Part::finite(std::move(keep));
      }
      return p.points.empty() ? Part::full() : p;
    }
    case Part::Kind::Cone: {
      if (p.points.empty()) return rank == 1 ? Part::finite(both_poles()) : Part::full();
      const ConeShape shape = cone_rays(RationalCone(rank, p.points));
      switch (shape.kind) {
        case ConeShape::Kind::Trivial: return Part::empty();
        case ConeShape::Kind::SingleRay: return Part::finite({*shape.direction});
        case ConeShape::Kind::Line:
          return Part::finite(canonical_points({*shape.direction, -*shape.direction}));
        case ConeShape::Kind::HigherDimensional: return p;
      }
    }
  }
  return p;
}

bool part_less(const Part& a, const Part& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return std::lexicographical_compare(a.points.begin(), a.points.end(), b.points.begin(),
                                      b.points.end());
}

bool atom_less(const JoinAtom& a, const JoinAtom& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), part_less);
}

bool all_contained(const std::vector<Direction>& xs, const Part& y) {
  return std::all_of(xs.begin(), xs.end(), [&](const Direction& d) { return y.contains(d); });
}

// Exact containment of canonical parts in the same factor.
bool part_subset(const Part& x, const Part& y, int rank) {
  using K = Part::Kind;
  if (x.kind == K::Empty) return true;
  if (y.kind == K::Empty) return false;
  if (y.kind == K::Full) return true;
  switch (x.kind) {
    case K::Full: return false;
    case K::Points: return all_contained(x.points, y);
    case K::Cofinite:
      if (y.kind != K::Cofinite) return false;
      return std::includes(x.points.begin(), x.points.end(), y.points.begin(), y.points.end());
    case K::Cone:
      if (y.kind == K::Cofinite)
        return std::none_of(y.points.begin(), y.points.end(),
                            [&](const Direction& e) { return x.contains(e); });
      if (y.kind == K::Cone)
        return cone_subset(RationalCone(rank, x.points), RationalCone(rank, y.points));
      return false;
    case K::Empty: return true;
  }
  return false;
}

bool atom_subset(const JoinAtom& x, const JoinAtom& y, const Decomposition& amb) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_empty() && !part_subset(x[i], y[i], amb.ranks[i])) return false;
  return true;
}

std::vector<JoinAtom> normalize(const Decomposition& amb, std::vector<JoinAtom> atoms) {
  std::vector<JoinAtom> kept;
  for (auto& atom : atoms) {
    if (atom.size() != amb.factors())
      throw AmbientMismatch("SphereSet: atom has " + std::to_string(atom.size()) +
                            " parts for " + std::to_string(amb.factors()) + " factors");
    for (std::size_t i = 0; i < atom.size(); ++i)
      atom[i] = canonical_part(std::move(atom[i]), amb.ranks[i]);
    if (std::all_of(atom.begin(), atom.end(), [](const Part& p) { return p.is_empty(); }))
      continue;
    kept.push_back(std::move(atom));
  }
  std::sort(kept.begin(), kept.end(), atom_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<JoinAtom> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < kept.size() && !subsumed; ++j)
      subsumed = j != i && atom_subset(kept[i], kept[j], amb);
    if (!subsumed) out.push_back(kept[i]);
  }
  return out;
}

// Three-valued containment of a cell in a part / atom / set.
enum class Tri { No, Partial, Yes };

struct Cell {
  std::optional<Direction> point;  // empty: generic remainder of the factor sphere
};

Tri part_status(const Part& p, const Cell& c) {
  if (c.point) return p.contains(*c.point) ? Tri::Yes : Tri::No;
  switch (p.kind) {
    case Part::Kind::Empty:
    case Part::Kind::Points: return Tri::No;
    case Part::Kind::Full:
    case Part::Kind::Cofinite: return Tri::Yes;
    case Part::Kind::Cone: return Tri::Partial;
  }
  return Tri::No;
}

Tri set_status(const SphereSet& s, const std::vector<std::size_t>& support,
               const std::vector<const Cell*>& cells) {
  bool partial = false;
  for (const auto& atom : s.atoms()) {
    Tri t = Tri::Yes;
    for (std::size_t k = 0; k < support.size(); ++k) {
      Tri pt = part_status(atom[support[k]], *cells[k]);
      if (pt == Tri::No) {
        t = Tri::No;
        break;
      }
      if (pt == Tri::Partial) t = Tri::Partial;
    }
    if (t == Tri::Yes) return Tri::Yes;
    if (t == Tri::Partial) partial = true;
  }
  return partial ? Tri::Partial : Tri::No;
}

std::vector<Cell> factor_cells(const SphereSet& a, const SphereSet& b, std::size_t f, int rank) {
  std::vector<Direction> pts;
  if (rank == 1) pts = both_poles();
  for (const SphereSet* s : {&a, &b})
    for (const auto& atom : s->atoms())
      if (atom[f].kind != Part::Kind::Cone)
        pts.insert(pts.end(), atom[f].points.begin(), atom[f].points.end());
  pts = canonical_points(std::move(pts));
  std::vector<Cell> cells;
  for (auto& p : pts) cells.push_back({p});
  if (rank >= 2) cells.push_back({std::nullopt});
  return cells;
}

}  // namespace

// ---------------------------------------------------------------- SphereSet

SphereSet::SphereSet(Decomposition ambient, std::vector<JoinAtom> atoms)
    : ambient_(std::move(ambient)), atoms_(normalize(ambient_, std::move(atoms))) {}

SphereSet SphereSet::empty(Decomposition ambient) { return SphereSet(std::move(ambient), {}); }

SphereSet SphereSet::full(Decomposition ambient) {
  JoinAtom atom(ambient.factors(), Part::full());
  return SphereSet(std::move(ambient), {atom});
}

SphereSet SphereSet::points(int rank, std::vector<Direction> pts) {
  return SphereSet(Decomposition::single(rank), {{Part::finite(std::move(pts))}});
}

SphereSet SphereSet::cofinite(int rank, std::vector<Direction> excluded) {
  return SphereSet(Decomposition::single(rank), {{Part::cofinite(std::move(excluded))}});
}

bool SphereSet::has_cone_parts() const {
  for (const auto& atom : atoms_)
    for (const auto& p : atom)
      if (p.kind == Part::Kind::Cone) return true;
  return false;
}

// ---------------------------------------------------------------- operations

SphereSet join(const SphereSet& a, const SphereSet& b) {
  Decomposition amb = concat(a.ambient(), b.ambient());
  const JoinAtom pad_a(a.ambient().factors(), Part::empty());
  const JoinAtom pad_b(b.ambient().factors(), Part::empty());
  std::vector<JoinAtom> atoms;
  auto glue = [](const JoinAtom& x, const JoinAtom& y) {
    JoinAtom out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
  };
  if (a.is_empty()) {
    for (const auto& y : b.atoms()) atoms.push_back(glue(pad_a, y));
  } else if (b.is_empty()) {
    for (const auto& x : a.atoms()) atoms.push_back(glue(x, pad_b));
  } else {
    for (const auto& x : a.atoms())
      for (const auto& y : b.atoms()) atoms.push_back(glue(x, y));
  }
  return SphereSet(std::move(amb), std::move(atoms));
}

SphereSet unite(const SphereSet& a, const SphereSet& b) {
  if (!(a.ambient() == b.ambient())) throw AmbientMismatch("union: ambient decompositions differ");
  std::vector<JoinAtom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return SphereSet(a.ambient(), std::move(atoms));
}

SphereSet complement(const SphereSet& a) {
  if (a.is_empty()) return SphereSet::full(a.ambient());
  if (is_full(a)) return SphereSet::empty(a.ambient());
  if (a.ambient().factors() != 1 || a.has_cone_parts())
    throw UnsupportedComplement(
        "complement: only single-factor finite/cofinite sets or full/empty sets are supported");

  const int rank = a.ambient().ranks[0];
  // merge the (single-part) atoms into one part
  std::vector<Direction> pts, excluded;
  bool cofinite = false, first_cofinite = true;
  for (const auto& atom : a.atoms()) {
    const Part& p = atom[0];
    if (p.kind == Part::Kind::Points) {
      pts.insert(pts.end(), p.points.begin(), p.points.end());
    } else if (p.kind == Part::Kind::Cofinite) {
      if (first_cofinite) {
        excluded = p.points;
        first_cofinite = false;
      } else {
        std::vector<Direction> keep;
        std::set_intersection(excluded.begin(), excluded.end(), p.points.begin(), p.points.end(),
                              std::back_inserter(keep));
        excluded = std::move(keep);
      }
      cofinite = true;
    }
  }
  pts = canonical_points(std::move(pts));
  if (cofinite) {
    std::vector<Direction> still;
    std::set_difference(excluded.begin(), excluded.end(), pts.begin(), pts.end(),
                        std::back_inserter(still));
    return SphereSet::points(rank, std::move(still));
  }
  return SphereSet::cofinite(rank, std::move(pts));
}

std::vector<Direction> intersect_with_finite(const SphereSet& a,
                                             const std::vector<Direction>& f) {
  std::vector<Direction> out;
  for (const auto& d : f)
    if (member(d, a)) out.push_back(d);
  return canonical_points(std::move(out));
}

SmallVector block(const SmallVector& x, const Decomposition& ambient, std::size_t factor) {
  return x.segment(ambient.offset(factor), ambient.ranks[factor]);
}

Direction embed(const Direction& d, const Decomposition& ambient, std::size_t factor) {
  if (d.dim() != ambient.ranks[factor])
    throw AmbientMismatch("embed: direction " + d.str() + " has the wrong rank for its factor");
  SmallVector v = SmallVector::Zero(ambient.dim());
  v.segment(ambient.offset(factor), d.dim()) = d.coords();
  return Direction(v);
}

bool member(const Direction& d, const SphereSet& a) {
  if (d.dim() != a.dim())
    throw AmbientMismatch("member: direction " + d.str() + " is not in R^" +
                          std::to_string(a.dim()));
  const auto& amb = a.ambient();
  for (const auto& atom : a.atoms()) {
    bool ok = true;
    for (std::size_t f = 0; f < amb.factors() && ok; ++f) {
      if (amb.ranks[f] == 0) continue;
      SmallVector part = block(d.coords(), amb, f);
      if (part.isZero()) continue;
      ok = atom[f].contains(Direction(part));
    }
    if (ok) return true;
  }
  return false;
}

Cardinality cardinality(const SphereSet& a) {
  Cardinality c;
  if (a.is_empty()) return c;
  std::vector<Direction> pts;
  for (const auto& atom : a.atoms()) {
    std::size_t nonempty = 0, where = 0;
    for (std::size_t f = 0; f < atom.size(); ++f)
      if (!atom[f].is_empty()) {
        ++nonempty;
        where = f;
      }
    if (nonempty != 1 || atom[where].kind != Part::Kind::Points) {
      c.kind = Cardinality::Kind::Infinite;
      return c;
    }
    for (const auto& p : atom[where].points) pts.push_back(embed(p, a.ambient(), where));
  }
  c.kind = Cardinality::Kind::Finite;
  c.points = canonical_points(std::move(pts));
  return c;
}

bool is_antipodal_pair(const SphereSet& a) {
  const Cardinality c = cardinality(a);
  return c.kind == Cardinality::Kind::Finite && c.count() == 2 && c.points[0] == -c.points[1];
}

std::optional<bool> subset(const SphereSet& a, const SphereSet& b) {
  if (!(a.ambient() == b.ambient())) throw AmbientMismatch("subset: ambient decompositions differ");
  const auto& amb = a.ambient();
  std::vector<std::vector<Cell>> cells(amb.factors());
  std::vector<std::size_t> live;
  for (std::size_t f = 0; f < amb.factors(); ++f) {
    if (amb.ranks[f] == 0) continue;
    cells[f] = factor_cells(a, b, f, amb.ranks[f]);
    live.push_back(f);
  }

  bool undecided = false;
  const std::size_t n = live.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) support.push_back(live[k]);
    std::vector<std::size_t> idx(support.size(), 0);
    while (true) {
      std::vector<const Cell*> tuple;
      for (std::size_t k = 0; k < support.size(); ++k) tuple.push_back(&cells[support[k]][idx[k]]);
      const Tri sa = set_status(a, support, tuple);
      const Tri sb = set_status(b, support, tuple);
      if (sa == Tri::Yes && sb == Tri::No) return false;
      if (sa != Tri::No && sb != Tri::Yes) undecided = true;
      std::size_t k = 0;
      while (k < support.size() && ++idx[k] == cells[support[k]].size()) idx[k++] = 0;
      if (k == support.size()) break;
    }
  }
  if (!undecided) return true;
  // sufficient atom-wise check before giving up
  for (const auto& x : a.atoms()) {
    bool inside = false;
    for (const auto& y : b.atoms()) inside = inside || atom_subset(x, y, amb);
    if (!inside) return std::nullopt;
  }
  return true;
}

std::optional<bool> equivalent(const SphereSet& a, const SphereSet& b) {
  if (!(a.ambient() == b.ambient())) return false;
  if (a == b) return true;
  auto ab = subset(a, b);
  if (ab && !*ab) return false;
  auto ba = subset(b, a);
  if (ba && !*ba) return false;
  if (ab && ba) return true;
  return std::nullopt;
}

bool is_full(const SphereSet& a) {
  return subset(SphereSet::full(a.ambient()), a).value_or(false);
}

SphereSet permute_factors(const SphereSet& a, const std::vector<std::size_t>& perm) {
  const auto& amb = a.ambient();
  if (perm.size() != amb.factors()) throw AmbientMismatch("permute_factors: wrong permutation size");
  std::vector<int> ranks;
  for (auto p : perm) ranks.push_back(amb.ranks.at(p));
  std::vector<JoinAtom> atoms;
  for (const auto& atom : a.atoms()) {
    JoinAtom out;
    for (auto p : perm) out.push_back(atom[p]);
    atoms.push_back(std::move(out));
  }
  return SphereSet(Decomposition(std::move(ranks)), std::move(atoms));
}

std::string describe(const SphereSet& a) {
  if (a.is_empty()) return "{}";
  std::ostringstream os;
  bool first_atom = true;
  for (const auto& atom : a.atoms()) {
    if (!first_atom) os << " u ";
    first_atom = false;
    os << "[";
    for (std::size_t f = 0; f < atom.size(); ++f) {
      if (f) os << " * ";
      const Part& p = atom[f];
      auto list = [&](const char* tag) {
        os << tag << "{";
        for (std::size_t i = 0; i < p.points.size(); ++i) os << (i ? "," : "") << p.points[i].str();
        os << "}";
      };
      switch (p.kind) {
        case Part::Kind::Empty: os << "empty"; break;
        case Part::Kind::Full: os << "S^" << a.ambient().ranks[f] - 1; break;
        case Part::Kind::Points: list(""); break;
        case Part::Kind::Cofinite: list("S\\"); break;
        case Part::Kind::Cone: list("cone"); break;
      }
    }
    os << "]";
  }
  return os.str();
}

const char* to_string(Cardinality::Kind k) {
  switch (k) {
    case Cardinality::Kind::Zero: return "Zero";
    case Cardinality::Kind::Finite: return "Finite";
    case Cardinality::Kind::Infinite: return "Infinite";
  }
  return "?";
}

}  // namespace bnsr
