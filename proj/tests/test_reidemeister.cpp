#include "bnsr/reidemeister.hpp"
#include "checks.hpp"

#include <doctest.h>

using namespace bnsr;

namespace {

IntMatrix m1(long x) {
  IntMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

}  // namespace

TEST_SUITE("reidemeister_abelian") {
  TEST_CASE("integers") {
    CHECK(reidemeister_number(FGAbelianAutomorphism::on_free(m1(-1))) == RValue::of(2));
    CHECK(reidemeister_number(FGAbelianAutomorphism::on_free(m1(1))).is_infinite());
    CHECK(fixed_subgroup_trivial(FGAbelianAutomorphism::on_free(m1(-1))));
    CHECK_FALSE(fixed_subgroup_trivial(FGAbelianAutomorphism::on_free(m1(1))));
  }

  TEST_CASE("Z^2 examples") {
    IntMatrix cat(2, 2);
    cat << 2, 1, 1, 1;
    CHECK(reidemeister_number(FGAbelianAutomorphism::on_free(cat)) == RValue::of(1));
    IntMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK_FALSE(fixed_subgroup_trivial(FGAbelianAutomorphism::on_free(swap)));
    CHECK(reidemeister_number(FGAbelianAutomorphism::on_free(swap)).is_infinite());
    IntMatrix neg(2, 2);
    neg << -1, 0, 0, -1;
    CHECK(reidemeister_number(FGAbelianAutomorphism::on_free(neg)) == RValue::of(4));
  }

  TEST_CASE("torsion and mixing") {
    FGAbelianAutomorphism phi;
    phi.free_part = m1(-1);
    phi.torsion_factors = {4};
    phi.torsion_part = m1(1);
    phi.mixing = m1(0);
    // Z x Z/4 with (-1, id): coker(1-phi) = Z/2 x Z/4
    CHECK(reidemeister_number(phi) == RValue::of(8));
    phi.torsion_part = m1(3);
    CHECK(reidemeister_number(phi) == RValue::of(4));
    phi.torsion_part = m1(2);
    CHECK_THROWS_AS(phi.validate(), InvalidAutomorphism);
    FGAbelianAutomorphism bad = FGAbelianAutomorphism::on_free(m1(2));
    CHECK_THROWS_AS(bad.validate(), InvalidAutomorphism);
  }

  TEST_CASE("finite groups by enumeration") {
    CHECK(brute_force_twisted_classes(FiniteGroupTable::cyclic(4), {0, 3, 2, 1}).count == 2);
    CHECK(brute_force_twisted_classes(FiniteGroupTable::cyclic(5), {0, 2, 4, 1, 3}).count == 1);
    for (const auto& g : {FiniteGroupTable::dihedral(3), FiniteGroupTable::dihedral(4), FiniteGroupTable::quaternion(),
                          FiniteGroupTable::heisenberg(3), FiniteGroupTable::cyclic(7)}) {
      std::vector<int> id(g.order());
      for (int i = 0; i < g.order(); ++i) id[i] = i;
      const auto tc = brute_force_twisted_classes(g, id);
      CHECK(tc.count == conjugacy_class_count(g));
      CHECK(tc.representatives.size() == tc.count);
      CHECK(tc.class_of.size() == static_cast<std::size_t>(g.order()));
    }
    CHECK(conjugacy_class_count(FiniteGroupTable::dihedral(3)) == 3);
    CHECK(conjugacy_class_count(FiniteGroupTable::quaternion()) == 5);
  }

  TEST_CASE("Abelian finite quotients agree with the Smith count") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
      const int k = 1 + t % 3;
      const SmallMatrix f = checks::random_unimodular(rng, k, 3);
      const RValue r = reidemeister_number(FGAbelianAutomorphism::on_free(cast_matrix<BigInt>(f)));
      if (r.is_infinite()) continue;
      const auto n = static_cast<std::int64_t>(*r.finite);
      if (n > 40) continue;
      CHECK(checks::twisted_class_count_oracle(f, n) == static_cast<std::size_t>(n));
    }
  }

  TEST_CASE("central extensions") {
    const auto z4 = FiniteGroupTable::cyclic(4);
    const auto id = verify_central_extension(extension_from_subgroup(z4, {0, 2}, {0, 1, 2, 3}));
    CHECK(id.valid);
    CHECK(id.central);
    CHECK(id.r_total == 4);
    CHECK(id.product_holds);
    // the same extension with x -> -x breaks the product
    const auto neg = verify_central_extension(extension_from_subgroup(z4, {0, 2}, {0, 3, 2, 1}));
    CHECK(neg.valid);
    CHECK(neg.r_total == 2);
    CHECK(neg.r_kernel * neg.r_quotient == 4);
    CHECK_FALSE(neg.product_holds);
    const auto q8 = FiniteGroupTable::quaternion();
    std::vector<int> id8(8);
    for (int i = 0; i < 8; ++i) id8[i] = i;
    const auto q = verify_central_extension(extension_from_subgroup(q8, q8.center(), id8));
    CHECK(q.r_total == 5);
    CHECK_FALSE(q.product_holds);
    CHECK_THROWS(extension_from_subgroup(FiniteGroupTable::dihedral(3), {0, 3}, {0, 1, 2, 3, 4, 5}));
  }
}
