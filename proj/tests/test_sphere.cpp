#include "bnsr/sphere.hpp"
#include "checks.hpp"

#include <doctest.h>

using namespace bnsr;

namespace {

SphereSet pm() { return SphereSet::points(1, {Direction{1}, Direction{-1}}); }
SphereSet pt(std::int64_t s) { return SphereSet::points(1, {Direction{s}}); }

}  // namespace

TEST_SUITE("sphere_algebra") {
  TEST_CASE("directions are primitive") {
    CHECK(Direction{4, -6} == Direction{2, -3});
    CHECK(antipode(Direction{2, -3}) == Direction{-2, 3});
    CHECK_THROWS(Direction{0, 0});
    CHECK(Direction::unit(3, 1, -1) == Direction{0, -1, 0});
  }

  TEST_CASE("joins") {
    const SphereSet e = join(SphereSet::empty_sphere(3), pm());
    const Cardinality c = cardinality(e);
    REQUIRE(c.kind == Cardinality::Kind::Finite);
    CHECK(c.points == std::vector<Direction>{Direction{0, 0, 0, -1}, Direction{0, 0, 0, 1}});
    CHECK(is_full(join(SphereSet::full_sphere(2), SphereSet::full_sphere(3))));
    CHECK(is_full(join(pm(), pm())));
    const SphereSet arc = join(pt(1), pt(1));
    CHECK(cardinality(arc).kind == Cardinality::Kind::Infinite);
    for (auto [a, b] : {std::pair{1, 2}, {1, 1}, {2, 1}, {5, 3}}) CHECK(member(Direction{a, b}, arc));
    CHECK_FALSE(member(Direction{1, -1}, arc));
    CHECK(member(Direction{1, 0}, arc));
  }

  TEST_CASE("complements inside the fragment") {
    CHECK(is_full(complement(SphereSet::empty_sphere(4))));
    CHECK(equivalent(complement(pt(-1)), pt(1)) == true);
    CHECK(complement(SphereSet::full_sphere(1)).is_empty());
    const SphereSet cof = SphereSet::cofinite(2, {Direction{1, 0}});
    CHECK(equivalent(complement(cof), SphereSet::points(2, {Direction{1, 0}})) == true);
    const SphereSet two = join(pt(1), pt(1));
    CHECK_THROWS_AS(complement(unite(two, join(pt(-1), pt(-1)))), UnsupportedComplement);
  }

  TEST_CASE("union and finite intersection") {
    const Decomposition amb({1, 2});
    const SphereSet a(amb, {{Part::finite({Direction{-1}}), Part::empty()}});
    const SphereSet b(amb, {{Part::empty(), Part::full()}});
    const SphereSet u = unite(a, b);
    CHECK(u.atoms().size() == 2);
    CHECK(equivalent(unite(u, SphereSet::empty(amb)), u) == true);
    CHECK(equivalent(unite(u, a), u) == true);
    CHECK(intersect_with_finite(SphereSet::full_sphere(2), {Direction{3, 1}}) == std::vector<Direction>{Direction{3, 1}});
    CHECK(intersect_with_finite(u, {Direction{-1, 0, 0}, Direction{1, 0, 0}, Direction{0, 1, 1}}) ==
          std::vector<Direction>{Direction{-1, 0, 0}, Direction{0, 1, 1}});
    CHECK_THROWS_AS(unite(a, SphereSet::full_sphere(3)), AmbientMismatch);
  }

  TEST_CASE("normal form drops covered atoms") {
    const Decomposition amb({1, 1});
    const SphereSet s(amb, {{Part::finite({Direction{1}}), Part::empty()},
                            {Part::finite({Direction{1}}), Part::finite({Direction{1}})}});
    CHECK(s.atoms().size() == 1);  // the point (1,0) lies on the quarter arc
    CHECK(SphereSet(amb, {{Part::empty(), Part::empty()}}).is_empty());
  }

  TEST_CASE("cardinality and antipodes") {
    CHECK(cardinality(SphereSet::full_sphere(2)).kind == Cardinality::Kind::Infinite);
    CHECK(cardinality(SphereSet::empty_sphere(2)).kind == Cardinality::Kind::Zero);
    CHECK(is_antipodal_pair(pm()));
    CHECK_FALSE(is_antipodal_pair(SphereSet::points(2, {Direction{1, 0}, Direction{0, 1}})));
    CHECK(member(Direction{1}, complement(pt(-1))));
  }

  TEST_CASE("permutation and embedding") {
    const SphereSet s = join(pt(1), SphereSet::empty_sphere(2));
    const SphereSet p = permute_factors(s, {1, 0});
    CHECK(p.ambient().ranks == std::vector<int>{2, 1});
    CHECK(member(Direction{0, 0, 1}, p));
    CHECK(embed(Direction{2, 1}, Decomposition({1, 2}), 1) == Direction{0, 2, 1});
    CHECK(block(SmallVector{{1, 2, 3}}, Decomposition({1, 2}), 1) == SmallVector{{2, 3}});
  }

  TEST_CASE("random join laws") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 500; ++t) {
      const SphereSet a = checks::random_factor_set(rng, t % 3 + 1);
      const SphereSet b = checks::random_factor_set(rng, t % 2 + 1);
      const SphereSet c = checks::random_factor_set(rng, 1);
      CHECK(equivalent(join(join(a, b), c), join(a, join(b, c))) == true);
      CHECK(equivalent(join(a, b), permute_factors(join(b, a), {1, 0})) == true);
      CHECK(subset(a, SphereSet::full(a.ambient())) == true);
      CHECK(equivalent(unite(a, a), a) == true);
    }
  }

  TEST_CASE("describe") {
    CHECK(describe(SphereSet::empty_sphere(2)) == "{}");
    CHECK_FALSE(describe(join(pt(1), SphereSet::full_sphere(2))).empty());
  }
}
