#include "bnsr/catalog.hpp"
#include "bnsr/group.hpp"

#include <doctest.h>

using namespace bnsr;

TEST_SUITE("group_catalog") {
  TEST_CASE("parsing products and aliases") {
    const GroupExpr g = parse_group_expr("BS(1,2) x F(3)");
    REQUIRE(g.node() == GroupExpr::Node::DirectProduct);
    CHECK(g.factors().at(0) == GroupExpr(GroupAtom::baumslag_solitar(2)));
    CHECK(g.factors().at(1) == GroupExpr(GroupAtom::free_group(3)));
    CHECK(parse_group_expr("Z") == GroupExpr(GroupAtom::free_abelian(1)));
    CHECK(parse_group_expr("F(1)") == GroupExpr(GroupAtom::free_abelian(1)));
    CHECK(parse_group_expr("B(2)") == GroupExpr(GroupAtom::free_abelian(1)));
    CHECK(parse_group_expr("Z^3") == GroupExpr(GroupAtom::free_abelian(3)));
    const GroupExpr fp = parse_group_expr("BS(1,2) * Zmod(3) * Zmod(5)");
    CHECK(fp.node() == GroupExpr::Node::FreeProduct);
    CHECK(fp.factors().size() == 3);
  }

  TEST_CASE("precedence and flattening") {
    const GroupExpr g = parse_group_expr("Z x Z * Klein");
    REQUIRE(g.node() == GroupExpr::Node::FreeProduct);
    CHECK(g.factors().at(0).node() == GroupExpr::Node::DirectProduct);
    CHECK(parse_group_expr("(Z x Z) x Z").factors().size() == 3);
    CHECK(parse_group_expr("Z \xc3\x97 Z") == parse_group_expr("Z x Z"));
    CHECK(parse_group_expr(parse_group_expr("Klein * (Z x Zmod(2))").str()) ==
          parse_group_expr("Klein * (Z x Zmod(2))"));
  }

  TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_group_expr("BS(2,3)"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("Q(3)"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("Z x"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("(Z"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("Zmod(0)"), ParseError);
    try {
      parse_group_expr("Z x Q");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }

  TEST_CASE("atom flags") {
    CHECK(GroupAtom::free_abelian(2).abelian());
    CHECK_FALSE(GroupAtom::lamplighter(2).finite());
    CHECK(GroupAtom::cyclic(1).trivial());
    CHECK(GroupAtom::cyclic(4).finite());
    CHECK_FALSE(GroupAtom::free_group(2).freely_indecomposable());
    CHECK(GroupAtom::klein().freely_indecomposable());
    CHECK(GroupAtom::lamplighter(3).finiteness_type() == 1);
    CHECK(GroupAtom::thompson().finiteness_type() == INT_MAX);
  }

  TEST_CASE("hom_rank is additive") {
    for (int n : {2, 3, 4}) CHECK(hom_rank(parse_group_expr("BS(1,2) x F(" + std::to_string(n) + ")")) == 1 + n);
    CHECK(hom_rank(parse_group_expr("Zmod(5)")) == 0);
    CHECK(hom_rank(parse_group_expr("F(2) * F(3)")) == 5);
    CHECK(hom_rank(parse_group_expr("Thompson x T(3) x L(2)")) == 6);
  }

  TEST_CASE("abelianization by Smith form matches hom_rank") {
    CHECK(abelianization_of_presentation(*presentation_of(GroupAtom::baumslag_solitar(2))) ==
          AbelianInvariants{1, {}});
    CHECK(abelianization_of_presentation(*presentation_of(GroupAtom::baumslag_solitar(4))) ==
          AbelianInvariants{1, {3}});
    CHECK(abelianization_of_presentation(FinitePresentation{{"x"}, {}}) == AbelianInvariants{1, {}});
    CHECK(abelianization_of_presentation(*presentation_of(GroupAtom::klein())) == AbelianInvariants{1, {2}});
    for (const char* e : {"Z^2", "F(3)", "B(4)", "Thompson", "Klein x Z", "BS(1,3) * F(2)"}) {
      const GroupExpr g = parse_group_expr(e);
      const auto p = presentation_of(g);
      REQUIRE(p.has_value());
      CHECK(abelianization_of_presentation(*p).rank == static_cast<std::size_t>(hom_rank(g)));
    }
    CHECK_FALSE(presentation_of(GroupAtom::lamplighter(2)).has_value());
  }

  TEST_CASE("free reduction") {
    CHECK(reduce({1, 2, -2, -1, 3}) == Word{3});
    CHECK(reduce({1, -1}).empty());
  }

  TEST_CASE("catalog facts for atoms") {
    const auto bs = lookup_invariants(parse_group_expr("BS(1,3)"));
    REQUIRE(bs.sigma1_complement.has_value());
    CHECK(bs.sigma1_complement->atoms().size() == 1);
    CHECK(member(Direction{-1}, *bs.sigma1_complement));
    CHECK(member(Direction{1}, *bs.omega_at(1).set));
    CHECK_FALSE(member(Direction{-1}, *bs.omega_at(1).set));
    CHECK(bs.o_class(1) == OClass::O1);

    const auto f = lookup_invariants(parse_group_expr("F(3)"));
    CHECK(is_full(*f.sigma1_complement));
    CHECK(f.omega_at(1).set->is_empty());
    CHECK(f.o_class(2) == OClass::O0);

    const auto b = lookup_invariants(parse_group_expr("B(3)"));
    CHECK(b.sigma1_complement->is_empty());
    CHECK(cardinality(*b.omega_at(1).set).count() == 2);

    const auto t = lookup_invariants(parse_group_expr("T(3)"));
    CHECK(t.omega_at(1).known_infinite());
    CHECK(t.o_class(3) == OClass::Other);

    const auto l = lookup_invariants(parse_group_expr("L(2)"), 3);
    CHECK(l.omega_at(1).known());
    CHECK(l.o_class(2) == OClass::Unknown);
    CHECK(l.rinf_citation.has_value());
  }

  TEST_CASE("product data is derived, unknown stays unknown") {
    const auto p = lookup_invariants(parse_group_expr("BS(1,2) x F(3)"), 1);
    CHECK(p.hom_rank == 4);
    CHECK(cardinality(*p.omega_at(1).set).count() == 1);
    CHECK(lookup_invariants(parse_group_expr("L(2) x Z"), 2).o_class(2) == OClass::Unknown);
  }
}
