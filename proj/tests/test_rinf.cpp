#include "bnsr/rinf.hpp"
#include "checks.hpp"

#include <doctest.h>

using namespace bnsr;

namespace {

Verdict run(const std::string& e, DecideOptions opt = {}) { return decide(parse_group_expr(e), opt); }

}  // namespace

TEST_SUITE("rinf_engine") {
  TEST_CASE("main theorem on Omega^1") {
    CHECK(decide_main(parse_group_expr("BS(1,5)"), 1).final_rule() == Rule::ThmMain1);
    CHECK(decide_main(parse_group_expr("F(2) x Z"), 1).conclusion == Conclusion::IndexTwoSubgroupAllRInf);
    CHECK(decide_main(parse_group_expr("F(2)"), 1).conclusion == Conclusion::Unknown);
    CHECK(decide_main(parse_group_expr("Z^2"), 1).conclusion == Conclusion::Unknown);
  }

  TEST_CASE("character rules") {
    CHECK(decide_gk(parse_group_expr("T(2)")).final_rule() == Rule::ThmGK2);
    CHECK(decide_gk(parse_group_expr("BS(1,2)")).final_rule() == Rule::ThmGK2);
    CHECK(decide_gk(parse_group_expr("Klein")).conclusion == Conclusion::Unknown);
    const Verdict l5 = run("L(5)");
    CHECK(l5.conclusion == Conclusion::FiniteIndexSubgroupAllRInf);
    CHECK(l5.final_rule() == Rule::ThmGK1);
  }

  TEST_CASE("free products") {
    CHECK(decide_free_product(parse_group_expr("Zmod(2) * Zmod(2)")).final_rule() == Rule::ThmFreeProd1);
    CHECK(decide_free_product(parse_group_expr("BS(1,4) * Zmod(3) * Zmod(4)")).final_rule() == Rule::ThmFreeProd2);
    CHECK(decide_free_product(parse_group_expr("Klein * Z * Z * Zmod(6)")).final_rule() == Rule::ThmFreeProd3);
    const Verdict bad = decide_free_product(parse_group_expr("Klein * F(2) * Zmod(3)"));
    CHECK(bad.conclusion == Conclusion::Unknown);
    CHECK_FALSE(bad.notes.empty());
    CHECK(decide_free_product(parse_group_expr("Z * Z")).conclusion == Conclusion::Unknown);
  }

  TEST_CASE("direct products") {
    CHECK(decide_product(parse_group_expr("BS(1,2) x F(4)"), 1).conclusion == Conclusion::RInfinity);
    CHECK(decide_product(parse_group_expr("F(3) x Z x F(2)"), 1).conclusion == Conclusion::IndexTwoSubgroupAllRInf);
    CHECK(decide_product(parse_group_expr("Z x Z"), 1).conclusion == Conclusion::Unknown);
    CHECK(run("Klein x Z x Zmod(2)").final_rule() == Rule::LemRFacts1);
  }

  TEST_CASE("extension propagation") {
    ExtensionSpec q;
    q.r_quotient = RValue::infinity();
    CHECK(propagate_extension(q).final_rule() == Rule::LemRFacts1);
    ExtensionSpec k;
    k.r_kernel = RValue::infinity();
    k.fix_quotient_finite = true;
    CHECK(propagate_extension(k).final_rule() == Rule::LemRFacts2);
    k.fix_quotient_finite = false;
    CHECK(propagate_extension(k).conclusion == Conclusion::Unknown);
    ExtensionSpec c;
    c.central = true;
    c.r_kernel = RValue::of(3);
    c.r_quotient = RValue::of(2);
    CHECK(propagate_extension(c).conclusion == Conclusion::Unknown);
    c.uniform_fibers = true;
    const Verdict v = propagate_extension(c);
    CHECK(v.conclusion == Conclusion::ReidemeisterValue);
    CHECK(v.value == RValue::of(6));
  }

  TEST_CASE("decide examples") {
    const Verdict v = run("BS(1,2) x F(3)");
    CHECK(v.conclusion == Conclusion::RInfinity);
    CHECK(v.final_rule() == Rule::ThmMain1);
    CHECK(run("B(4)").final_rule() == Rule::ThmMain2);
    CHECK(run("Zmod(7)").conclusion == Conclusion::Unknown);
    CHECK(run("Z x Z").conclusion == Conclusion::Unknown);
    CHECK(run("Thompson").final_rule() == Rule::CatalogFact);
  }

  TEST_CASE("without cited facts verdicts never get stronger") {
    std::mt19937_64 rng(9);
    DecideOptions bare;
    bare.use_catalog_rinf = false;
    for (int t = 0; t < 400; ++t) {
      const GroupExpr g = checks::random_group_expr(rng);
      const Verdict full = decide(g), less = decide(g, bare);
      CHECK_MESSAGE(less.strength() <= full.strength(), g.str());
    }
  }

  TEST_CASE("determinism and replayable traces") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 400; ++t) {
      const GroupExpr g = checks::random_group_expr(rng);
      const Verdict a = decide(g), b = decide(g);
      CHECK(a.conclusion == b.conclusion);
      CHECK(a.trace.size() == b.trace.size());
      const auto bad = verify_trace(a);
      CHECK_MESSAGE(!bad, g.str() << ": " << bad.value_or(""));
      if (a.conclusion == Conclusion::Unknown) CHECK(a.trace.empty());
    }
  }

  TEST_CASE("trace verifier rejects broken traces") {
    Verdict v = run("BS(1,2) x F(3)");
    REQUIRE(v.trace.size() >= 2);
    v.trace.back().premises = {static_cast<int>(v.trace.size()) + 3};
    CHECK(verify_trace(v).has_value());
    Verdict w = run("BS(1,2)");
    w.conclusion = Conclusion::IndexTwoSubgroupAllRInf;
    CHECK(verify_trace(w).has_value());
  }
}
