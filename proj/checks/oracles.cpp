#include "checks.hpp"

#include "bnsr/reidemeister.hpp"

#include <algorithm>
#include <numeric>

namespace bnsr::checks {

namespace {

// Odometer over [-bound, bound]^m.
template <typename F>
void for_each_vector(int m, int bound, F&& f) {
  std::vector<std::int64_t> v(m, -bound);
  while (true) {
    f(v);
    int i = 0;
    while (i < m && v[i] == bound) v[i++] = -bound;
    if (i == m) return;
    ++v[i];
  }
}

bool primitive(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g == 1;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

std::vector<Direction> lattice_directions(int m, int bound) {
  std::vector<Direction> out;
  for_each_vector(m, bound, [&](const std::vector<std::int64_t>& v) {
    if (primitive(v)) out.emplace_back(v);
  });
  return out;
}

std::vector<Direction> brute_force_cone_points(const std::vector<Direction>& normals, int m, int bound) {
  std::vector<Direction> out;
  for (const Direction& d : lattice_directions(m, bound)) {
    bool ok = true;
    for (const Direction& f : normals) ok = ok && d.coords().dot(f.coords()) <= 0;
    if (ok) out.push_back(d);
  }
  return out;
}

std::size_t twisted_class_count_oracle(const SmallMatrix& f, std::int64_t modulus) {
  const Eigen::Index k = f.rows();
  SmallMatrix gens = SmallMatrix::Identity(k, k);
  gens -= f;
  return orbit_count_mod(gens, modulus);
}

SmallMatrix random_unimodular(std::mt19937_64& rng, int k, int bound) {
  while (true) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SmallMatrix m = SmallMatrix::Zero(k, k);
    for (int i = 0; i < k; ++i) m(i, perm[i]) = uniform(rng, 0, 1) ? 1 : -1;
    const int ops = k == 1 ? 0 : uniform(rng, 1, 6);
    for (int o = 0; o < ops; ++o) {
      const int i = uniform(rng, 0, k - 1);
      int j = uniform(rng, 0, k - 2);
      if (j >= i) ++j;
      const int c = uniform(rng, -2, 2);
      m.row(i) += c * m.row(j);
    }
    if (m.cwiseAbs().maxCoeff() <= bound) return m;
  }
}

SphereSet random_factor_set(std::mt19937_64& rng, int rank) {
  if (rank == 0) return SphereSet::empty_sphere(0);
  const auto pool = lattice_directions(rank, 2);
  auto some_points = [&] {
    std::vector<Direction> pts;
    const int n = uniform(rng, 1, 3);
    for (int i = 0; i < n; ++i) pts.push_back(pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)]);
    return pts;
  };
  switch (uniform(rng, 0, 3)) {
    case 0: return SphereSet::empty_sphere(rank);
    case 1: return SphereSet::full_sphere(rank);
    case 2: return SphereSet::points(rank, some_points());
    default: return SphereSet::cofinite(rank, some_points());
  }
}

GroupExpr random_group_expr(std::mt19937_64& rng) {
  auto atom = [&]() -> GroupExpr {
    switch (uniform(rng, 0, 10)) {
      case 0: return GroupAtom::free_abelian(uniform(rng, 0, 2));
      case 1: return GroupAtom::free_group(uniform(rng, 2, 3));
      case 2: return GroupAtom::baumslag_solitar(uniform(rng, 2, 4));
      case 3: return GroupAtom::klein();
      case 4: return GroupAtom::braid(uniform(rng, 3, 4));
      case 5: return GroupAtom::thompson();
      case 6: return GroupAtom::generalized_thompson(uniform(rng, 2, 3));
      case 7: return GroupAtom::lamplighter(uniform(rng, 2, 4));
      case 8: return GroupAtom::cyclic(uniform(rng, 2, 5));
      case 9: return GroupAtom::free_abelian(1);
      default: return GroupAtom::baumslag_solitar(2);
    }
  };
  const int n = uniform(rng, 1, 3);
  std::vector<GroupExpr> fs;
  for (int i = 0; i < n; ++i) fs.push_back(atom());
  if (n == 1) return fs.front();
  if (uniform(rng, 0, 4) == 0) {
    std::vector<GroupExpr> nontrivial;
    for (auto& f : fs)
      if (!f.trivial()) nontrivial.push_back(f);
    if (nontrivial.size() >= 2) return GroupExpr::free(nontrivial);
  }
  return GroupExpr::direct(fs);
}

}  // namespace bnsr::checks
