#include "bnsr/json_io.hpp"

#include <doctest.h>

using namespace bnsr;

TEST_SUITE("json_io") {
  TEST_CASE("sphere sets round trip") {
    const std::vector<SphereSet> sets{
        SphereSet::points(1, {Direction{1}}),
        SphereSet::empty_sphere(3),
        SphereSet::cofinite(2, {Direction{1, 2}}),
        join(SphereSet::points(1, {Direction{-1}}), SphereSet::full_sphere(3)),
        SphereSet(Decomposition({2}), {{Part::cone({Direction{1, 0}, Direction{0, 1}})}}),
    };
    for (const auto& s : sets) {
      const SphereSet back = sphere_from_json(Json::parse(to_json(s).dump()));
      CHECK(back == s);
    }
    CHECK_THROWS_AS(sphere_from_json(Json::parse(R"({"ambient":[1]})")), JsonFormatError);
    CHECK_THROWS_AS(sphere_from_json(Json::parse(R"({"ambient":[1],"atoms":[["most"]]})")), JsonFormatError);
  }

  TEST_CASE("integers") {
    CHECK(to_json(RValue::of(2)) == 2);
    CHECK(to_json(RValue::infinity()) == "inf");
    CHECK(to_json(BigInt("100000000000000000000000")) == "100000000000000000000000");
    const IntMatrix m = matrix_from_json(Json::parse(R"([[1, "-7"], [0, "123456789012345678901"]])"));
    CHECK(m(0, 1) == -7);
    CHECK(m(1, 1) == BigInt("123456789012345678901"));
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), JsonFormatError);
    // oversized literals arrive as doubles; they must be passed as strings
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[123456789012345678901]]")), JsonFormatError);
    CHECK_THROWS_AS(integers_from_json(Json::parse(R"(["x"])")), JsonFormatError);
  }

  TEST_CASE("verdict and invariants reports") {
    const Json v = to_json(decide(parse_group_expr("BS(1,2) x F(3)")));
    CHECK(v["conclusion"] == "RInfinity");
    CHECK(v["trace"].back()["rule"] == "ThmMain1");
    CHECK(v["trace"].back()["quote"].is_string());
    const Json inv = invariants_json(parse_group_expr("F(2) x Z"), 2);
    CHECK(inv["hom_rank"] == 3);
    CHECK(inv["omega"]["1"]["cardinality"] == 2);
    CHECK(inv["omega"]["1"]["antipodal"] == true);
    CHECK(inv["omega"]["1"]["o_class"] == "O2");
    CHECK(invariants_json(parse_group_expr("L(2)"), 2)["finiteness_type"] == 1);
  }

  TEST_CASE("probe report") {
    const auto ball = enumerate_ball(GroupAtom::baumslag_solitar(2), 6);
    const ProbeReport r = connectivity_probe(ball, Direction{1}, ProbeConfig{});
    const Json j = to_json(r);
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][0].contains("|V|"));
    CHECK(j["evidence"] == "SupportsMembership");
    const std::string csv = probe_csv(r);
    CHECK(csv.rfind("s,vertices,components,lambda,shell_touched,reliable\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  }
}
