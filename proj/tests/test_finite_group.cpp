#include "bnsr/finite_group.hpp"

#include <doctest.h>

using namespace bnsr;

TEST_SUITE("finite_group") {
  TEST_CASE("standard tables") {
    CHECK(FiniteGroupTable::cyclic(6).order() == 6);
    CHECK(FiniteGroupTable::dihedral(4).order() == 8);
    CHECK_FALSE(FiniteGroupTable::dihedral(4).is_abelian());
    CHECK(FiniteGroupTable::quaternion().center().size() == 2);
    CHECK(FiniteGroupTable::heisenberg(3).order() == 27);
    CHECK(FiniteGroupTable::heisenberg(3).center().size() == 3);
    CHECK(FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(4)).is_abelian());
  }

  TEST_CASE("table validation") {
    CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {1, 1}}), InvalidGroupTable);
    CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {0, 1}}), InvalidGroupTable);
    CHECK_NOTHROW(FiniteGroupTable({{0, 1}, {1, 0}}));
  }

  TEST_CASE("automorphism counts") {
    CHECK(FiniteGroupTable::cyclic(5).automorphisms().size() == 4);
    CHECK(FiniteGroupTable::cyclic(8).automorphisms().size() == 4);
    CHECK(FiniteGroupTable::quaternion().automorphisms().size() == 24);
    CHECK(FiniteGroupTable::dihedral(4).automorphisms().size() == 8);
    CHECK(FiniteGroupTable::dihedral(3).automorphisms().size() == 6);
    for (const auto& a : FiniteGroupTable::dihedral(4).automorphisms())
      CHECK(FiniteGroupTable::dihedral(4).is_automorphism(a));
  }

  TEST_CASE("closure and generators") {
    const auto z12 = FiniteGroupTable::cyclic(12);
    CHECK(z12.closure({4}) == std::vector<int>{0, 4, 8});
    CHECK(z12.closure(z12.generators()).size() == 12);
    CHECK_THROWS_AS(z12.check_automorphism({0, 2, 4, 6, 8, 10, 0, 2, 4, 6, 8, 10}), InvalidGroupTable);
  }
}
