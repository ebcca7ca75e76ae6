#include "bnsr/reidemeister.hpp"

#include "bnsr/smith.hpp"
#include "bnsr/union_find.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bnsr {

FGAbelianAutomorphism FGAbelianAutomorphism::on_free(IntMatrix f) {
  FGAbelianAutomorphism phi;
  phi.free_part = std::move(f);
  phi.torsion_part = IntMatrix(0, 0);
  phi.mixing = IntMatrix(0, phi.free_part.cols());
  return phi;
}

IntMatrix FGAbelianAutomorphism::block_matrix() const {
  const Eigen::Index k = free_rank(), t = torsion_count();
  IntMatrix m = IntMatrix::Zero(k + t, k + t);
  m.topLeftCorner(k, k) = free_part;
  if (t > 0) {
    m.bottomLeftCorner(t, k) = mixing;
    m.bottomRightCorner(t, t) = torsion_part;
  }
  return m;
}

void FGAbelianAutomorphism::validate() const {
  const Eigen::Index k = free_part.rows(), t = torsion_count();
  if (free_part.cols() != k) throw InvalidAutomorphism("free part is not square");
  if (k > 0) {
    const BigInt det = determinant(free_part);
    if (abs_value(det) != 1)
      throw InvalidAutomorphism("free part has determinant " + det.str() + ", not +-1");
  }
  for (const auto& d : torsion_factors)
    if (d < 2) throw InvalidAutomorphism("torsion factor " + d.str() + " is < 2");
  if (torsion_part.rows() != t || torsion_part.cols() != t)
    throw InvalidAutomorphism("torsion part must be " + std::to_string(t) + "x" + std::to_string(t));
  if (mixing.rows() != t || mixing.cols() != k)
    throw InvalidAutomorphism("mixing must be " + std::to_string(t) + "x" + std::to_string(k));
  if (t == 0) return;

  for (Eigen::Index i = 0; i < t; ++i)
    for (Eigen::Index j = 0; j < t; ++j)
      if ((torsion_factors[i] * torsion_part(j, i)) % torsion_factors[j] != 0)
        throw InvalidAutomorphism("torsion part is not well defined: generator " + std::to_string(i) +
                                  " of order " + torsion_factors[i].str() +
                                  " maps to an element of larger order in factor " +
                                  std::to_string(j));
  IntMatrix rel = IntMatrix::Zero(t, 2 * t);
  for (Eigen::Index i = 0; i < t; ++i) rel(i, i) = torsion_factors[i];
  rel.rightCols(t) = torsion_part;
  const AbelianInvariants c = cokernel(rel);
  if (c.rank != 0 || !c.torsion.empty())
    throw InvalidAutomorphism("torsion part is not surjective on the torsion subgroup");
}

RValue reidemeister_number(const FGAbelianAutomorphism& phi) {
  phi.validate();
  const Eigen::Index k = phi.free_rank(), t = phi.torsion_count(), n = k + t;
  IntMatrix rel = IntMatrix::Zero(n, t + n);
  for (Eigen::Index i = 0; i < t; ++i) rel(k + i, i) = phi.torsion_factors[i];
  rel.rightCols(n) = IntMatrix::Identity(n, n) - phi.block_matrix();
  auto order = cokernel(rel).order();
  return order ? RValue::of(*order) : RValue::infinity();
}

bool fixed_subgroup_trivial(const FGAbelianAutomorphism& phi) {
  if (phi.torsion_count() != 0)
    throw std::invalid_argument("fixed_subgroup_trivial: automorphism has a torsion part");
  phi.validate();
  const Eigen::Index k = phi.free_rank();
  IntMatrix m = IntMatrix::Identity(k, k);
  m -= phi.free_part;
  return determinant(m) != 0;
}

TwistedClasses brute_force_twisted_classes(const FiniteGroupTable& g, const std::vector<int>& phi) {
  g.check_automorphism(phi);
  const int n = g.order();
  UnionFind uf(n);
  for (int s = 0; s < n; ++s) {
    const int back = g.inverse(phi[s]);
    for (int a = 0; a < n; ++a) uf.unite(a, g.mul(g.mul(s, a), back));
  }
  TwistedClasses out;
  out.class_of.assign(n, -1);
  std::map<std::size_t, int> index;
  for (int a = 0; a < n; ++a) {
    const std::size_t r = uf.find(a);
    auto [it, fresh] = index.emplace(r, static_cast<int>(out.representatives.size()));
    if (fresh) out.representatives.push_back(static_cast<int>(r));
    out.class_of[a] = it->second;
  }
  out.count = out.representatives.size();
  return out;
}

std::size_t conjugacy_class_count(const FiniteGroupTable& g) {
  std::size_t total = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++total;
  return total / static_cast<std::size_t>(g.order());
}

std::size_t orbit_count_mod(const SmallMatrix& images, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("orbit_count_mod: modulus must be >= 1");
  const Eigen::Index k = images.rows();
  std::int64_t size = 1;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (size > 20'000'000 / modulus) throw std::length_error("orbit_count_mod: quotient too large");
    size *= modulus;
  }
  auto mod = [modulus](std::int64_t x) { return ((x % modulus) + modulus) % modulus; };
  UnionFind uf(static_cast<std::size_t>(size));
  std::vector<std::int64_t> digits(k);
  for (std::int64_t x = 0; x < size; ++x) {
    std::int64_t r = x;
    for (Eigen::Index i = 0; i < k; ++i) {
      digits[i] = r % modulus;
      r /= modulus;
    }
    for (Eigen::Index c = 0; c < images.cols(); ++c) {
      std::int64_t y = 0, place = 1;
      for (Eigen::Index i = 0; i < k; ++i) {
        y += mod(digits[i] + images(i, c)) * place;
        place *= modulus;
      }
      uf.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
  }
  return uf.set_count();
}

ExtensionData extension_from_subgroup(const FiniteGroupTable& b, const std::vector<int>& subgroup,
                                      const std::vector<int>& phi_b) {
  b.check_automorphism(phi_b);
  std::vector<int> h = subgroup;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (b.closure(h) != h) throw InvalidGroupTable("extension: subset is not a subgroup");
  auto in_h = [&](int x) { return std::binary_search(h.begin(), h.end(), x); };
  for (int g = 0; g < b.order(); ++g)
    for (int x : h) {
      if (!in_h(b.mul(b.mul(g, x), b.inverse(g))))
        throw InvalidGroupTable("extension: subgroup is not normal");
    }
  for (int x : h)
    if (!in_h(phi_b[x])) throw InvalidGroupTable("extension: subgroup is not invariant");

  auto index_in_h = [&](int x) {
    return static_cast<int>(std::lower_bound(h.begin(), h.end(), x) - h.begin());
  };
  const int na = static_cast<int>(h.size());

  // coset label = least element of x*H
  std::vector<int> label(b.order());
  std::vector<int> reps;
  for (int x = 0; x < b.order(); ++x) {
    int least = x;
    for (int y : h) least = std::min(least, b.mul(x, y));
    label[x] = least;
    if (least == x) reps.push_back(x);
  }
  auto coset = [&](int x) {
    return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), label[x]) - reps.begin());
  };
  const int nc = static_cast<int>(reps.size());

  ExtensionData e{
      FiniteGroupTable::from_rule(na, [&](int i, int j) { return index_in_h(b.mul(h[i], h[j])); }),
      b,
      FiniteGroupTable::from_rule(nc, [&](int i, int j) { return coset(b.mul(reps[i], reps[j])); }),
      {}, {}, {}, phi_b, {}};
  for (int i = 0; i < na; ++i) {
    e.inclusion.push_back(h[i]);
    e.phi_a.push_back(index_in_h(phi_b[h[i]]));
  }
  for (int x = 0; x < b.order(); ++x) e.projection.push_back(coset(x));
  for (int c = 0; c < nc; ++c) e.phi_c.push_back(coset(phi_b[reps[c]]));
  return e;
}

namespace {

std::string check_hom(const FiniteGroupTable& from, const FiniteGroupTable& to,
                      const std::vector<int>& f, const std::string& name) {
  if (static_cast<int>(f.size()) != from.order()) return name + " has the wrong domain size";
  for (int x : f)
    if (x < 0 || x >= to.order()) return name + " maps outside its codomain";
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (f[from.mul(a, b)] != to.mul(f[a], f[b]))
        return name + " is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")";
  return {};
}

std::string first_problem(const ExtensionData& e) {
  for (auto [g, phi, name] : {std::tuple{&e.a, &e.phi_a, "phi'"}, std::tuple{&e.b, &e.phi_b, "phi"},
                              std::tuple{&e.c, &e.phi_c, "phibar"}}) {
    try {
      g->check_automorphism(*phi);
    } catch (const InvalidGroupTable& ex) {
      return std::string(name) + ": " + ex.what();
    }
  }
  if (auto p = check_hom(e.a, e.b, e.inclusion, "inclusion"); !p.empty()) return p;
  if (auto p = check_hom(e.b, e.c, e.projection, "projection"); !p.empty()) return p;

  std::vector<int> img = e.inclusion;
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) return "inclusion is not injective";
  std::vector<bool> hit(e.c.order(), false);
  for (int x : e.projection) hit[x] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return "projection is not surjective";
  for (int x = 0; x < e.b.order(); ++x) {
    const bool in_kernel = e.projection[x] == e.c.identity();
    if (in_kernel != std::binary_search(img.begin(), img.end(), x))
      return "not exact at B: image of A differs from the kernel of the projection (element " +
             std::to_string(x) + ")";
  }
  for (int a = 0; a < e.a.order(); ++a)
    if (e.phi_b[e.inclusion[a]] != e.inclusion[e.phi_a[a]])
      return "phi does not restrict to phi' on A (element " + std::to_string(a) + ")";
  for (int x = 0; x < e.b.order(); ++x)
    if (e.projection[e.phi_b[x]] != e.phi_c[e.projection[x]])
      return "phi does not induce phibar on C (element " + std::to_string(x) + ")";
  return {};
}

}  // namespace

ExtensionReport verify_central_extension(const ExtensionData& ext) {
  ExtensionReport r;
  r.problem = first_problem(ext);
  if (!r.problem.empty()) return r;

  const std::vector<int> z = ext.b.center();
  r.central = std::all_of(ext.inclusion.begin(), ext.inclusion.end(),
                          [&](int x) { return std::binary_search(z.begin(), z.end(), x); });
  if (!r.central) {
    r.problem = "A is not central in B";
    return r;
  }
  r.valid = true;

  const TwistedClasses ca = brute_force_twisted_classes(ext.a, ext.phi_a);
  const TwistedClasses cb = brute_force_twisted_classes(ext.b, ext.phi_b);
  const TwistedClasses cc = brute_force_twisted_classes(ext.c, ext.phi_c);
  r.r_kernel = ca.count;
  r.r_total = cb.count;
  r.r_quotient = cc.count;
  r.product_holds = r.r_total == r.r_kernel * r.r_quotient;
  r.fiber_counts.assign(cc.count, 0);
  for (int rep : cb.representatives) ++r.fiber_counts[cc.class_of[ext.projection[rep]]];
  return r;
}

}  // namespace bnsr
