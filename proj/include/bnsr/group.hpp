#pragma once

#include "bnsr/finite_group.hpp"
#include "bnsr/smith.hpp"

#include <climits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnsr {

struct GroupAtom {
  enum class Kind {
    FreeAbelian,          // Z^k, k >= 0
    Free,                 // F(n), n >= 2 (F(1) parses to Z)
    BaumslagSolitar,      // BS(1,n), n >= 2
    KleinBottle,
    Braid,                // B(n), n >= 3 (B(2) parses to Z)
    ThompsonF,
    GeneralizedThompson,  // F_{n,0}, n >= 2
    Lamplighter,          // Z/n wr Z, n >= 2
    FiniteCyclic,         // Z/k, k >= 1
    FiniteTable
  };

  Kind kind = Kind::FreeAbelian;
  int param = 0;
  std::shared_ptr<const FiniteGroupTable> table;  // FiniteTable only

  static GroupAtom free_abelian(int k);
  static GroupAtom free_group(int n);
  static GroupAtom baumslag_solitar(int n);
  static GroupAtom klein();
  static GroupAtom braid(int n);
  static GroupAtom thompson();
  static GroupAtom generalized_thompson(int n);
  static GroupAtom lamplighter(int n);
  static GroupAtom cyclic(int k);
  static GroupAtom finite_table(FiniteGroupTable t);

  bool finite() const;
  bool abelian() const;
  bool trivial() const;
  bool freely_indecomposable() const;
  /// Largest n with the group of type F_n; INT_MAX for F_infinity.
  int finiteness_type() const;
  std::string name() const;

  bool operator==(const GroupAtom& o) const;
};

class GroupExpr {
 public:
  enum class Node { Atom, DirectProduct, FreeProduct };

  GroupExpr(GroupAtom a);  // NOLINT(google-explicit-constructor)
  static GroupExpr direct(std::vector<GroupExpr> factors);
  static GroupExpr free(std::vector<GroupExpr> factors);

  Node node() const { return node_; }
  bool is_atom() const { return node_ == Node::Atom; }
  const GroupAtom& atom() const;
  const std::vector<GroupExpr>& factors() const { return factors_; }

  bool finite() const;
  bool abelian() const;
  bool trivial() const;
  bool freely_indecomposable() const;
  int finiteness_type() const;
  std::string str() const;

  bool operator==(const GroupExpr& o) const;

 private:
  GroupExpr(Node n, std::vector<GroupExpr> factors);
  Node node_;
  GroupAtom atom_;
  std::vector<GroupExpr> factors_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: expr := dprod ('*' dprod)* ; dprod := primary (('x'|'×') primary)* ;
/// primary := atom | '(' expr ')'. Nested products of the same kind are flattened.
GroupExpr parse_group_expr(const std::string& text);

int hom_rank(const GroupExpr& g);

/// Word over generators 1..n; letter +i / -i is generator i or its inverse.
using Word = std::vector<int>;

struct FinitePresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// Free reduction of a word.
Word reduce(Word w);

/// Z^gens modulo the exponent-sum rows of the relators.
AbelianInvariants abelianization_of_presentation(const FinitePresentation& p);

/// Stored finite presentation; empty for atoms without one (T(n), L(n)).
std::optional<FinitePresentation> presentation_of(const GroupAtom& a);
/// Free product: disjoint union. Direct product: also adds commutators across factors.
std::optional<FinitePresentation> presentation_of(const GroupExpr& g);

}  // namespace bnsr
