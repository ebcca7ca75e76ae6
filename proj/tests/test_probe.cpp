#include "bnsr/catalog.hpp"
#include "bnsr/probe.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bnsr;

namespace {

std::vector<GroupAtom> probe_atoms() {
  return {GroupAtom::free_abelian(2), GroupAtom::free_group(2), GroupAtom::baumslag_solitar(2),
          GroupAtom::baumslag_solitar(3), GroupAtom::klein(), GroupAtom::free_abelian(1)};
}

bool included(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_SUITE("cayley_probe") {
  TEST_CASE("ball sizes") {
    for (int r : {2, 3, 5}) CHECK(enumerate_ball(GroupAtom::free_abelian(2), r).size() == std::size_t(2 * r * r + 2 * r + 1));
    CHECK(enumerate_ball(GroupAtom::free_group(2), 2).size() == 17);
    CHECK(enumerate_ball(GroupAtom::free_group(2), 6).size() == 1457);
    CHECK(enumerate_ball(GroupAtom::baumslag_solitar(2), 6).size() == 375);
    CHECK(enumerate_ball(GroupAtom::klein(), 6).size() == 85);
    CHECK_THROWS_AS(enumerate_ball(GroupAtom::thompson(), 4), UnsupportedAtom);
    CHECK_THROWS(enumerate_ball(GroupAtom::free_abelian(2), 1));
    CHECK_THROWS(enumerate_ball(GroupAtom::free_group(3), 12, 1000));
  }

  TEST_CASE("heights are additive on every edge") {
    for (const auto& a : probe_atoms()) CHECK(height_defects(enumerate_ball(a, 6)).empty());
  }

  TEST_CASE("sublevel sets") {
    const BallGraph z2 = enumerate_ball(GroupAtom::free_abelian(2), 2);
    CHECK(halfspace_subgraph(z2, Direction{1, 0}, 0).size() == 9);
    const BallGraph bs = enumerate_ball(GroupAtom::baumslag_solitar(2), 6);
    const auto up = halfspace_subgraph(bs, Direction{1}, 1);
    for (int v : up) CHECK(bs.heights[v][0] >= 1);
    CHECK(up.size() == static_cast<std::size_t>(std::count_if(bs.heights.begin(), bs.heights.end(),
                                                               [](const auto& h) { return h[0] >= 1; })));
    CHECK(halfspace_subgraph(bs, Direction{1}, 7).empty());
    CHECK(in_cone({1, 3}, Direction{0, 1}, 2));
    CHECK_FALSE(in_cone({2, 3}, Direction{0, 1}, 2));
    CHECK(in_halfspace({1, 1}, Direction{1, 1}, Rational(1)));
    CHECK_FALSE(in_halfspace({1, 0}, Direction{1, 1}, Rational(1)));  // 1 < sqrt 2
    CHECK(in_halfspace({-1, 0}, Direction{1, 1}, Rational(-1)));
  }

  TEST_CASE("nesting and mode coherence") {
    for (const auto& a : probe_atoms()) {
      const BallGraph b = enumerate_ball(a, 5);
      std::vector<Direction> dirs;
      for (int i = 0; i < b.rank; ++i) {
        dirs.push_back(Direction::unit(b.rank, i, 1));
        dirs.push_back(Direction::unit(b.rank, i, -1));
      }
      if (b.rank == 2) dirs.push_back(Direction{1, -2});
      for (const auto& d : dirs) {
        CHECK(cone_subgraph(b, d, 0) == halfspace_subgraph(b, d, 0));
        for (const Rational s : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
          const Rational next = s + Rational(1, 2);
          CHECK(included(halfspace_subgraph(b, d, next), halfspace_subgraph(b, d, s)));
          CHECK(included(cone_subgraph(b, d, next), cone_subgraph(b, d, s)));
          CHECK(included(cone_subgraph(b, d, s), halfspace_subgraph(b, d, s)));
          if (b.rank == 1) CHECK(cone_subgraph(b, d, s) == halfspace_subgraph(b, d, s));
        }
      }
    }
  }

  TEST_CASE("evidence examples") {
    const BallGraph bs = enumerate_ball(GroupAtom::baumslag_solitar(2), 6);
    const ProbeConfig cfg;
    CHECK(connectivity_probe(bs, Direction{1}, cfg).evidence == Evidence::SupportsMembership);
    CHECK(connectivity_probe(bs, Direction{-1}, cfg).evidence == Evidence::SupportsNonMembership);
    const BallGraph f2 = enumerate_ball(GroupAtom::free_group(2), 6);
    CHECK(connectivity_probe(f2, Direction{1, 0}, cfg).evidence == Evidence::SupportsNonMembership);
    ProbeConfig cone = cfg;
    cone.mode = ProbeMode::TruncatedCone;
    for (const auto& row : probe_direction_scan(GroupAtom::free_abelian(2), default_probe_directions(2), cone)) {
      CHECK(row.report.evidence == Evidence::SupportsMembership);
      CHECK_FALSE(row.warn);
    }
    for (const auto& row : probe_direction_scan(GroupAtom::klein(), {Direction{1}, Direction{-1}}, cfg))
      CHECK(row.report.evidence == Evidence::SupportsMembership);
  }

  TEST_CASE("report shape and determinism") {
    const BallGraph bs = enumerate_ball(GroupAtom::baumslag_solitar(3), 6);
    ProbeConfig cfg;
    cfg.grid = {0, Rational(1, 2), 1, 2};
    const auto a = connectivity_probe(bs, Direction{1}, cfg);
    const auto b = connectivity_probe(bs, Direction{1}, cfg);
    REQUIRE(a.rows.size() == 4);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].s == cfg.grid[i]);
      CHECK(a.rows[i].vertices == b.rows[i].vertices);
      CHECK(a.rows[i].components == b.rows[i].components);
      CHECK(a.rows[i].lambda == b.rows[i].lambda);
      if (a.rows[i].lambda) CHECK(*a.rows[i].lambda <= cfg.lambda_max);
    }
    CHECK(a.evidence == b.evidence);
    CHECK(a.radius == 6);
  }

  TEST_CASE("cone evidence implies half-space evidence on the scanned atoms") {
    for (const auto& a : probe_atoms()) {
      const BallGraph b = enumerate_ball(a, 6);
      ProbeConfig half, cone;
      cone.mode = ProbeMode::TruncatedCone;
      for (const auto& d : default_probe_directions(b.rank)) {
        const auto c = connectivity_probe(b, d, cone).evidence;
        const auto h = connectivity_probe(b, d, half).evidence;
        if (c == Evidence::SupportsMembership) CHECK(h == Evidence::SupportsMembership);
      }
    }
  }

  TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(to_string(Rational(4)) == "4");
  }
}
