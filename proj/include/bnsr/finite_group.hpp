#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnsr {

class InvalidGroupTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxTableOrder = 512;

/// A finite group given by its Cayley table on elements 0..n-1.
/// The constructor checks closure, identity, inverses and associativity.
class FiniteGroupTable {
 public:
  explicit FiniteGroupTable(std::vector<std::vector<int>> table);

  static FiniteGroupTable from_rule(int n, const std::function<int(int, int)>& mul);
  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable dihedral(int n);  // order 2n
  static FiniteGroupTable quaternion();
  static FiniteGroupTable heisenberg(int p);  // order p^3, upper unitriangular mod p
  static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  bool is_abelian() const;
  std::vector<int> center() const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// True when `perm` is a bijective homomorphism of this group.
  bool is_automorphism(const std::vector<int>& perm) const;
  /// Throws InvalidGroupTable with the first offending pair.
  void check_automorphism(const std::vector<int>& perm) const;

  /// Greedy generating set: repeatedly adds the least element outside the
  /// subgroup generated so far.
  std::vector<int> generators() const;
  /// Subgroup generated by `gens`, sorted.
  std::vector<int> closure(const std::vector<int>& gens) const;
  /// All automorphisms (as permutations) in a deterministic order; stops
  /// after `limit` when limit > 0.
  std::vector<std::vector<int>> automorphisms(std::size_t limit = 0) const;

  bool operator==(const FiniteGroupTable& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

}  // namespace bnsr
