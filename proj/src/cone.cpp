#include "bnsr/cone.hpp"

#include <algorithm>
#include <map>

namespace bnsr {
namespace {

IntVector to_big(const SmallVector& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i);
  return out;
}

IntVector normalized(const IntVector& v) { return primitive_part(v); }

// Indices of constraints tight at r.
std::vector<std::size_t> tight_set(const std::vector<IntVector>& constraints, const IntVector& r) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < constraints.size(); ++j)
    if (dot(constraints[j], r) == 0) out.push_back(j);
  return out;
}

Eigen::Index rank_of_rows(const std::vector<IntVector>& constraints,
                          const std::vector<std::size_t>& rows, Eigen::Index m) {
  if (rows.empty()) return 0;
  IntMatrix a(static_cast<Eigen::Index>(rows.size()), m);
  for (std::size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = constraints[rows[i]].transpose();
  return rank(a);
}

std::int64_t to_small(const BigInt& x) {
  if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN))
    throw std::overflow_error("cone generator does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

Direction to_direction(const IntVector& v) {
  SmallVector s(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) s(i) = to_small(v(i));
  return Direction(s);
}

// Lines are unoriented; pick the representative whose first nonzero entry is positive.
Direction orient_line(const Direction& d) {
  for (Eigen::Index i = 0; i < d.dim(); ++i) {
    if (d[i] > 0) return d;
    if (d[i] < 0) return -d;
  }
  return d;
}

}  // namespace

RationalCone::RationalCone(Eigen::Index m, std::vector<Direction> fs) : ambient_dim(m) {
  for (const auto& f : fs)
    if (f.dim() != m) throw std::invalid_argument("RationalCone: normal has wrong dimension");
  normals = canonical_points(std::move(fs));
}

bool RationalCone::contains(const SmallVector& x) const {
  for (const auto& f : normals)
    if (dot(f.coords(), x) > 0) return false;
  return true;
}

ConeGenerators cone_generators(const RationalCone& c) {
  const Eigen::Index m = c.ambient_dim;
  if (m > kMaxConeDimension)
    throw DimensionCapExceeded("cone dimension " + std::to_string(m) + " exceeds cap of " +
                               std::to_string(kMaxConeDimension));
  ConeGenerators g;
  for (Eigen::Index i = 0; i < m; ++i) {
    IntVector e = IntVector::Zero(m);
    e(i) = 1;
    g.lines.push_back(e);
  }
  std::vector<IntVector> processed;

  for (const auto& f : c.normals) {
    const IntVector a = to_big(f.coords());
    auto pivot = std::find_if(g.lines.begin(), g.lines.end(),
                              [&](const IntVector& l) { return dot(a, l) != 0; });
    processed.push_back(a);

    if (pivot != g.lines.end()) {
      IntVector l0 = *pivot;
      g.lines.erase(pivot);
      BigInt al0 = dot(a, l0);
      if (al0 > 0) {
        l0 = -l0;
        al0 = -al0;
      }
      for (auto& l : g.lines) {
        BigInt al = dot(a, l);
        if (al != 0) l = normalized(IntVector(al0 * l - al * l0));
      }
      for (auto& r : g.rays) {
        BigInt ar = dot(a, r);
        if (ar != 0) r = normalized(IntVector(-al0 * r + ar * l0));
      }
      g.rays.push_back(normalized(l0));
      continue;
    }

    std::vector<IntVector> pos, next;
    for (const auto& r : g.rays) {
      BigInt ar = dot(a, r);
      if (ar > 0)
        pos.push_back(r);
      else
        next.push_back(r);
    }
    std::vector<IntVector> neg;
    for (const auto& r : next)
      if (dot(a, r) < 0) neg.push_back(r);
    for (const auto& p : pos)
      for (const auto& q : neg) {
        BigInt ap = dot(a, p), aq = dot(a, q);
        next.push_back(normalized(IntVector(ap * q - aq * p)));
      }

    // keep extreme rays only, one per tight set
    const Eigen::Index need = m - static_cast<Eigen::Index>(g.lines.size()) - 1;
    std::map<std::vector<std::size_t>, IntVector> by_face;
    for (const auto& r : next) {
      auto z = tight_set(processed, r);
      if (rank_of_rows(processed, z, m) != need) continue;
      by_face.emplace(std::move(z), r);
    }
    g.rays.clear();
    for (auto& [face, r] : by_face) g.rays.push_back(r);
  }

  IntMatrix span(static_cast<Eigen::Index>(g.lines.size() + g.rays.size()), m);
  Eigen::Index row = 0;
  for (const auto& l : g.lines) span.row(row++) = l.transpose();
  for (const auto& r : g.rays) span.row(row++) = r.transpose();
  g.dimension = span.rows() == 0 ? 0 : rank(span);
  return g;
}

ConeShape cone_rays(const RationalCone& c) {
  const ConeGenerators g = cone_generators(c);
  ConeShape s;
  s.dimension = g.dimension;
  if (g.dimension == 0) {
    s.kind = ConeShape::Kind::Trivial;
  } else if (g.dimension == 1) {
    if (!g.lines.empty()) {
      s.kind = ConeShape::Kind::Line;
      s.direction = orient_line(to_direction(g.lines.front()));
    } else {
      s.kind = ConeShape::Kind::SingleRay;
      s.direction = to_direction(g.rays.front());
    }
  } else {
    s.kind = ConeShape::Kind::HigherDimensional;
  }
  return s;
}

bool cone_subset(const RationalCone& inner, const RationalCone& outer) {
  if (inner.ambient_dim != outer.ambient_dim)
    throw std::invalid_argument("cone_subset: dimension mismatch");
  const ConeGenerators g = cone_generators(inner);
  for (const auto& f : outer.normals) {
    const IntVector a = to_big(f.coords());
    for (const auto& l : g.lines)
      if (dot(a, l) != 0) return false;
    for (const auto& r : g.rays)
      if (dot(a, r) > 0) return false;
  }
  return true;
}

const char* to_string(ConeShape::Kind k) {
  switch (k) {
    case ConeShape::Kind::Trivial: return "TrivialCone";
    case ConeShape::Kind::SingleRay: return "SingleRay";
    case ConeShape::Kind::Line: return "Line";
    case ConeShape::Kind::HigherDimensional: return "HigherDimensional";
  }
  return "?";
}

}  // namespace bnsr
