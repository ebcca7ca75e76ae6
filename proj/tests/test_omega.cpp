#include "bnsr/cone.hpp"
#include "bnsr/omega.hpp"
#include "checks.hpp"

#include <doctest.h>

using namespace bnsr;

namespace {

SphereSet pts(int m, std::vector<Direction> p) { return SphereSet::points(m, std::move(p)); }

}  // namespace

TEST_SUITE("omega_engine") {
  TEST_CASE("cone shapes") {
    const auto ray = cone_rays(RationalCone(1, {Direction{-1}}));
    CHECK(ray.kind == ConeShape::Kind::SingleRay);
    CHECK(ray.direction == Direction{1});
    const auto line = cone_rays(RationalCone(2, {Direction{1, 0}, Direction{-1, 0}}));
    CHECK(line.kind == ConeShape::Kind::Line);
    CHECK(cone_rays(RationalCone(2, {Direction{1, 0}, Direction{0, 1}})).kind == ConeShape::Kind::HigherDimensional);
    CHECK(cone_rays(RationalCone(2, {Direction{1, 0}, Direction{-1, 0}, Direction{0, 1}, Direction{0, -1}})).kind ==
          ConeShape::Kind::Trivial);
    CHECK(cone_rays(RationalCone(3, {})).dimension == 3);
    CHECK_THROWS_AS(cone_generators(RationalCone(9, {})), DimensionCapExceeded);
  }

  TEST_CASE("cone generators of a pointed 3d cone") {
    const RationalCone c(3, {Direction{-1, 0, 0}, Direction{0, -1, 0}, Direction{0, 0, -1}});
    const auto g = cone_generators(c);
    CHECK(g.lines.empty());
    CHECK(g.rays.size() == 3);
    CHECK(g.dimension == 3);
    CHECK(cone_subset(RationalCone(3, {Direction{-1, 0, 0}, Direction{0, -1, 0}, Direction{0, 0, -1},
                                       Direction{-1, -1, 0}}),
                      c));
  }

  TEST_CASE("omega from sigma") {
    CHECK(equivalent(omega_from_sigma_complement(pts(1, {Direction{-1}}), 1), pts(1, {Direction{1}})) == true);
    CHECK(cardinality(omega_from_sigma_complement(SphereSet::empty_sphere(1), 1)).count() == 2);
    CHECK(equivalent(omega_from_sigma_complement(pts(2, {Direction{1, 0}, Direction{-1, 0}}), 2),
                     pts(2, {Direction{0, 1}, Direction{0, -1}})) == true);
    CHECK(omega_from_sigma_complement(SphereSet::full_sphere(3), 3).is_empty());
    CHECK(is_full(omega_from_sigma(SphereSet::full_sphere(2), 2)));
    const SphereSet quad = omega_from_sigma_complement(pts(2, {Direction{1, 0}, Direction{0, 1}}), 2);
    CHECK(quad.has_cone_parts());
    CHECK(member(Direction{-1, -2}, quad));
    CHECK_FALSE(member(Direction{1, -2}, quad));
    CHECK(cardinality(quad).kind == Cardinality::Kind::Infinite);
    CHECK_THROWS_AS(omega_from_sigma_complement(join(SphereSet::points(1, {Direction{1}}),
                                                     SphereSet::points(1, {Direction{1}})),
                                                2),
                    UnsupportedSigma);
  }

  TEST_CASE("product formulas") {
    const auto o = omega_of_product({pts(1, {Direction{1}}), SphereSet::empty_sphere(3)});
    REQUIRE(o.has_value());
    CHECK(cardinality(*o).points == std::vector<Direction>{Direction{1, 0, 0, 0}});
    CHECK_FALSE(omega_of_product({pts(1, {Direction{1}}), std::nullopt}).has_value());
    const auto s = sigma1_complement_of_product({pts(1, {Direction{-1}}), SphereSet::full_sphere(2)});
    REQUIRE(s.has_value());
    CHECK(member(Direction{-1, 0, 0}, *s));
    CHECK(member(Direction{0, 3, -1}, *s));
    CHECK_FALSE(member(Direction{-1, 1, 0}, *s));
    const auto zz = sigma1_complement_of_product({SphereSet::empty_sphere(1), SphereSet::empty_sphere(1)});
    CHECK(zz->is_empty());
  }

  TEST_CASE("finite Omega is one point or an antipodal pair") {
    CHECK(check_finite12(pts(1, {Direction{1}})).ok);
    const auto r = check_finite12(pts(1, {Direction{1}, Direction{-1}}));
    CHECK(r.ok);
    CHECK(r.antipodal);
    CHECK_FALSE(check_finite12(pts(2, {Direction{1, 0}, Direction{0, 1}})).ok);
    CHECK_FALSE(check_finite12(pts(2, {Direction{1, 0}, Direction{0, 1}, Direction{-1, 0}})).ok);
    CHECK(check_finite12(SphereSet::full_sphere(2)).ok);
  }

  TEST_CASE("O classes") {
    CHECK(classify_O(parse_group_expr("BS(1,3)"), 1) == OClass::O1);
    CHECK(classify_O(parse_group_expr("Zmod(5)"), 1) == OClass::O0);
    CHECK(classify_O(parse_group_expr("F(2) x Z"), 1) == OClass::O2);
    CHECK(classify_O(parse_group_expr("Z^2"), 1) == OClass::Other);
  }

  TEST_CASE("levels are nested for random groups") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
      const GroupExpr g = checks::random_group_expr(rng);
      const auto inv = lookup_invariants(g, 3);
      CHECK_MESSAGE(!monotonicity_violation(inv), g.str());
      for (const auto& [n, lf] : inv.omega)
        if (lf.set) CHECK_MESSAGE(check_finite12(*lf.set).ok, g.str());
    }
  }

  TEST_CASE("cone engine agrees with lattice enumeration in small cases") {
    for (const auto& f : checks::lattice_directions(2, 1))
      for (const auto& h : checks::lattice_directions(2, 1)) {
        const auto brute = checks::brute_force_cone_points({f, h}, 2, 4);
        const auto c = cardinality(omega_from_sigma_complement(pts(2, {f, h}), 2));
        if (c.kind != Cardinality::Kind::Infinite) CHECK(c.points == canonical_points(brute));
        else CHECK(brute.size() > 2);
      }
  }
}
