#include "bnsr/finite_group.hpp"

#include <algorithm>

namespace bnsr {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw InvalidGroupTable("group table is empty");
  if (n > kMaxTableOrder)
    throw InvalidGroupTable("group order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxTableOrder));
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InvalidGroupTable("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw InvalidGroupTable("group table entry out of range");
  }

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidGroupTable("group table has no identity");

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw InvalidGroupTable("element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = table_[a][b];
      for (int c = 0; c < n; ++c)
        if (table_[ab][c] != table_[a][table_[b][c]])
          throw InvalidGroupTable("group table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

FiniteGroupTable FiniteGroupTable::from_rule(int n, const std::function<int(int, int)>& mul) {
  if (n <= 0 || n > kMaxTableOrder) throw InvalidGroupTable("group order out of range");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  return from_rule(n, [n](int a, int b) { return (a + b) % n; });
}

// r^a s^b  <->  a + n*b
FiniteGroupTable FiniteGroupTable::dihedral(int n) {
  return from_rule(2 * n, [n](int x, int y) {
    const int a = x % n, b = x / n, c = y % n, d = y / n;
    const int rot = ((a + (b ? -c : c)) % n + n) % n;
    return rot + n * ((b + d) % 2);
  });
}

// elements +-1, +-i, +-j, +-k as sign*unit: index = unit + 4*(sign<0)
FiniteGroupTable FiniteGroupTable::quaternion() {
  // unit products: 0=1, 1=i, 2=j, 3=k; entry = (unit, sign flip)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int flip[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return from_rule(8, [](int x, int y) {
    const int u = x % 4, v = y % 4;
    const int s = (x / 4 + y / 4 + flip[u][v]) % 2;
    return unit[u][v] + 4 * s;
  });
}

// (x,y,z) <-> x + p*y + p^2*z, product (x+x', y+y', z+z'+x*y')
FiniteGroupTable FiniteGroupTable::heisenberg(int p) {
  return from_rule(p * p * p, [p](int u, int v) {
    const int x = u % p, y = (u / p) % p, z = u / (p * p);
    const int x2 = v % p, y2 = (v / p) % p, z2 = v / (p * p);
    return (x + x2) % p + p * ((y + y2) % p) + p * p * ((z + z2 + x * y2) % p);
  });
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
  const int m = b.order();
  return from_rule(a.order() * m, [&](int x, int y) {
    return a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  });
}

bool FiniteGroupTable::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroupTable::center() const {
  std::vector<int> z;
  for (int a = 0; a < order(); ++a) {
    bool central = true;
    for (int b = 0; b < order() && central; ++b) central = table_[a][b] == table_[b][a];
    if (central) z.push_back(a);
  }
  return z;
}

void FiniteGroupTable::check_automorphism(const std::vector<int>& perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n)
    throw InvalidGroupTable("automorphism has " + std::to_string(perm.size()) +
                            " entries, group has order " + std::to_string(n));
  std::vector<bool> hit(n, false);
  for (int x : perm) {
    if (x < 0 || x >= n || hit[x]) throw InvalidGroupTable("automorphism is not a permutation");
    hit[x] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[table_[a][b]] != table_[perm[a]][perm[b]])
        throw InvalidGroupTable("map is not a homomorphism at (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
}

bool FiniteGroupTable::is_automorphism(const std::vector<int>& perm) const {
  try {
    check_automorphism(perm);
    return true;
  } catch (const InvalidGroupTable&) {
    return false;
  }
}


std::vector<int> FiniteGroupTable::closure(const std::vector<int>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<int> queue{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int g : gens) {
      const int y = table_[queue[i]][g];
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> FiniteGroupTable::generators() const {
  std::vector<int> gens;
  std::vector<int> sub = closure(gens);
  while (static_cast<int>(sub.size()) < order()) {
    int next = 0;
    while (std::binary_search(sub.begin(), sub.end(), next)) ++next;
    gens.push_back(next);
    sub = closure(gens);
  }
  return gens;
}

std::vector<std::vector<int>> FiniteGroupTable::automorphisms(std::size_t limit) const {
  const int n = order();
  const std::vector<int> gens = generators();
  // every element as a word in the generators (BFS spanning tree)
  std::vector<int> parent(n, -1), via(n, -1), bfs{identity_};
  parent[identity_] = identity_;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = table_[bfs[i]][gens[k]];
      if (parent[y] < 0) {
        parent[y] = bfs[i];
        via[y] = static_cast<int>(k);
        bfs.push_back(y);
      }
    }

  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size(), 0);
  while (true) {
    std::vector<int> map(n, -1);
    map[identity_] = identity_;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const int x = bfs[i];
      map[x] = table_[map[parent[x]]][images[via[x]]];
    }
    if (is_automorphism(map)) {
      out.push_back(std::move(map));
      if (limit && out.size() >= limit) break;
    }
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == n) images[k++] = 0;
    if (k == images.size()) break;
  }
  return out;
}

}  // namespace bnsr
