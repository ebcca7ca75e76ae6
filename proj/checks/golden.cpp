#include "checks.hpp"

#include "bnsr/catalog.hpp"
#include "bnsr/cone.hpp"
#include "bnsr/omega.hpp"
#include "bnsr/probe.hpp"
#include "bnsr/reidemeister.hpp"
#include "bnsr/rinf.hpp"
#include "bnsr/smith.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace bnsr::checks {

namespace {

class Golden {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_++ < 4) detail_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const { return detail_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream detail_;
};

CheckResult run(std::string name, const std::function<void(Golden&)>& body) {
  Golden g;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(g);
  } catch (const std::exception& e) {
    g.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(name), g.ok(), g.detail(), secs};
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

SphereSet pts1(std::initializer_list<std::int64_t> signs) {
  std::vector<Direction> p;
  for (auto s : signs) p.push_back(Direction{s});
  return SphereSet::points(1, p);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

bool equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool same(const SphereSet& a, const SphereSet& b) { return equivalent(a, b).value_or(false); }

std::string rule_name(const Verdict& v) { return v.final_rule() ? to_string(*v.final_rule()) : "none"; }

void expect_verdict(Golden& g, const std::string& what, const Verdict& v, Conclusion c,
                    std::optional<Rule> rule) {
  g.expect(v.conclusion == c, what + ": conclusion " + to_string(v.conclusion));
  if (rule) g.expect(v.final_rule() == rule, what + ": rule " + rule_name(v));
}

// ---------------------------------------------------------------------------
CheckResult group_catalog() {
  return run("golden group_catalog", [](Golden& g) {
    const GroupExpr e1 = parse_group_expr("BS(1,2) x F(3)");
    g.expect(e1.node() == GroupExpr::Node::DirectProduct && e1.factors().size() == 2 &&
                 e1.factors()[0] == GroupExpr(GroupAtom::baumslag_solitar(2)) &&
                 e1.factors()[1] == GroupExpr(GroupAtom::free_group(3)),
             "parse BS(1,2) x F(3)");
    g.expect(parse_group_expr("Z") == GroupExpr(GroupAtom::free_abelian(1)), "parse Z");
    const GroupExpr e3 = parse_group_expr("BS(1,2) * Zmod(3) * Zmod(5)");
    g.expect(e3.node() == GroupExpr::Node::FreeProduct && e3.factors().size() == 3, "parse free product");

    for (int n : {2, 3, 5})
      g.expect(hom_rank(parse_group_expr("BS(1,2) x F(" + std::to_string(n) + ")")) == 1 + n,
               "hom_rank BS(1,2) x F(n)");
    g.expect(hom_rank(parse_group_expr("Zmod(5)")) == 0, "hom_rank Zmod(5)");
    g.expect(hom_rank(parse_group_expr("F(2) * F(3)")) == 5, "hom_rank F(2)*F(3)");

    const auto bs = abelianization_of_presentation(*presentation_of(GroupAtom::baumslag_solitar(2)));
    g.expect(bs.rank == 1 && bs.torsion.empty(), "abelianization BS(1,2)");
    const auto z = abelianization_of_presentation(FinitePresentation{{"x"}, {}});
    g.expect(z.rank == 1 && z.torsion.empty(), "abelianization <x|>");
    const auto k = abelianization_of_presentation(*presentation_of(GroupAtom::klein()));
    g.expect(k.rank == 1 && k.torsion == std::vector<BigInt>{2}, "abelianization Klein");

    for (int n : {2, 3, 4}) {
      const std::string ns = std::to_string(n);
      const auto b = lookup_invariants(parse_group_expr("BS(1," + ns + ")"), 1);
      g.expect(same(b.sigma1_complement.value(), pts1({-1})), "BS(1,n) Sigma^1 complement");
      g.expect(same(b.omega_at(1).set.value(), pts1({1})), "BS(1,n) Omega^1");
      const auto f = lookup_invariants(parse_group_expr("F(" + ns + ")"), 1);
      g.expect(is_full(f.sigma1_complement.value()), "F(n) Sigma^1 complement full");
      g.expect(f.omega_at(1).set.value().is_empty(), "F(n) Omega^1 empty");
      if (n >= 3) {
        const auto br = lookup_invariants(parse_group_expr("B(" + ns + ")"), 1);
        g.expect(br.sigma1_complement.value().is_empty(), "B(n) Sigma^1 complement empty");
        g.expect(same(br.omega_at(1).set.value(), pts1({1, -1})), "B(n) Omega^1");
      }
    }
  });
}

// ---------------------------------------------------------------------------
CheckResult sphere_algebra() {
  return run("golden sphere_algebra", [](Golden& g) {
    for (int n : {2, 3}) {
      const SphereSet j = join(SphereSet::empty_sphere(n), pts1({1, -1}));
      const Cardinality c = cardinality(j);
      g.expect(c.kind == Cardinality::Kind::Finite && c.count() == 2, "empty * {+-} has two points");
      g.expect(member(Direction::unit(n + 1, n, 1), j) && member(Direction::unit(n + 1, n, -1), j),
               "empty * {+-} = {+-e_(n+1)}");
      g.expect(is_antipodal_pair(j), "empty * {+-} antipodal");
    }
    for (int p : {1, 2, 3})
      for (int q : {1, 2})
        g.expect(is_full(join(SphereSet::full_sphere(p), SphereSet::full_sphere(q))), "full * full");
    const SphereSet arc = join(pts1({1}), pts1({1}));
    g.expect(cardinality(arc).kind == Cardinality::Kind::Infinite, "{+e1}*{+e2} infinite");
    for (const Direction& d : {Direction{2, 1}, Direction{1, 1}, Direction{1, 2}})
      g.expect(member(d, arc), "arc sample " + d.str());
    g.expect(!member(Direction{-1, 1}, arc), "arc excludes (-1,1)");

    for (int n : {1, 2, 3}) g.expect(is_full(complement(SphereSet::empty_sphere(n))), "complement of empty");
    g.expect(same(complement(pts1({-1})), pts1({1})), "complement {-1} in S^0");
    g.expect(complement(SphereSet::full_sphere(1)).is_empty(), "complement of full S^0");

    const Decomposition amb({1, 3});
    const SphereSet minus_inf(amb, {{Part::finite({Direction{-1}}), Part::empty()}});
    const SphereSet factor2(amb, {{Part::empty(), Part::full()}});
    const SphereSet u = unite(minus_inf, factor2);
    g.expect(u.atoms().size() == 2, "{-e1} u S^2 has two atoms");
    g.expect(same(unite(u, SphereSet::empty(amb)), u), "a u empty = a");
    const Direction d{1, -2, 0};
    g.expect(intersect_with_finite(SphereSet::full_sphere(3), {d}) == std::vector<Direction>{d},
             "full n {d} = {d}");

    g.expect(cardinality(SphereSet::full_sphere(2)).kind == Cardinality::Kind::Infinite, "full S^1 infinite");
    g.expect(antipode(Direction{2, -3}) == Direction{-2, 3}, "antipode (2,-3)");
    g.expect(member(Direction{1}, complement(pts1({-1}))), "+e1 in complement {-e1}");
  });
}

// ---------------------------------------------------------------------------
CheckResult omega_engine() {
  return run("golden omega_engine", [](Golden& g) {
    g.expect(same(omega_from_sigma_complement(pts1({-1}), 1), pts1({1})), "m=1 F={-1}");
    g.expect(same(omega_from_sigma_complement(SphereSet::empty_sphere(1), 1), pts1({1, -1})), "m=1 F=empty");
    g.expect(same(omega_from_sigma_complement(SphereSet::points(2, {Direction{1, 0}, Direction{-1, 0}}), 2),
                  SphereSet::points(2, {Direction{0, 1}, Direction{0, -1}})),
             "m=2 F={+-e1}");

    const ConeShape ray = cone_rays(RationalCone(1, {Direction{-1}}));
    g.expect(ray.kind == ConeShape::Kind::SingleRay && ray.direction == Direction{1}, "cone {-e1} in R^1");
    const ConeShape line = cone_rays(RationalCone(2, {Direction{1, 0}, Direction{-1, 0}}));
    g.expect(line.kind == ConeShape::Kind::Line &&
                 (line.direction == Direction{0, 1} || line.direction == Direction{0, -1}),
             "cone {+-e1} in R^2");
    const RationalCone quad(2, {Direction{1, 0}, Direction{0, 1}});
    const ConeShape q = cone_rays(quad);
    g.expect(q.kind == ConeShape::Kind::HigherDimensional && q.dimension == 2, "third quadrant");
    g.expect(quad.contains(SmallVector{{-1, -1}}) && quad.contains(SmallVector{{-2, -1}}),
             "third quadrant samples");

    for (int n : {2, 3}) {
      const auto ex1 = omega_of_product({pts1({1}), SphereSet::empty_sphere(n)});
      g.expect(ex1 && cardinality(*ex1).count() == 1 && member(Direction::unit(1 + n, 0, 1), *ex1),
               "Omega^1(BS(1,2) x F(n)) = {+inf}");
      const auto ex2 = omega_of_product({SphereSet::empty_sphere(n), pts1({1, -1})});
      g.expect(ex2 && cardinality(*ex2).count() == 2 && is_antipodal_pair(*ex2), "Omega^1(F(n) x Z)");

      const auto s1 = sigma1_complement_of_product({pts1({-1}), SphereSet::full_sphere(n)});
      const Decomposition amb({1, n});
      g.expect(s1 && same(*s1, SphereSet(amb, {{Part::finite({Direction{-1}}), Part::empty()},
                                               {Part::empty(), Part::full()}})),
               "[Sigma^1(BS(1,2) x F(n))]^c");
      const auto s2 = sigma1_complement_of_product({SphereSet::full_sphere(n), SphereSet::empty_sphere(1)});
      g.expect(s2 && same(*s2, SphereSet(Decomposition({n, 1}), {{Part::full(), Part::empty()}})),
               "[Sigma^1(F(n) x Z)]^c");
    }
    const auto zz = omega_of_product({pts1({1, -1}), pts1({1, -1})});
    g.expect(zz && is_full(*zz), "Omega^1(Z) * Omega^1(Z) = S^1");
    const auto zs = sigma1_complement_of_product({SphereSet::empty_sphere(1), SphereSet::empty_sphere(1)});
    g.expect(zs && zs->is_empty(), "[Sigma^1(Z x Z)]^c empty");

    g.expect(check_finite12(pts1({1})).ok, "finite12 {+e1}");
    const auto pm = check_finite12(pts1({1, -1}));
    g.expect(pm.ok && pm.antipodal, "finite12 {+-e1}");
    g.expect(!check_finite12(SphereSet::points(2, {Direction{1, 0}, Direction{0, 1}})).ok, "finite12 {e1,e2}");

    for (int m : {2, 3}) g.expect(classify_O(parse_group_expr("BS(1," + std::to_string(m) + ")"), 1) == OClass::O1,
                                  "BS(1,m) in O1");
    g.expect(classify_O(parse_group_expr("Zmod(5)"), 1) == OClass::O0, "Zmod(5) in O0");
    g.expect(classify_O(parse_group_expr("F(3) x Z"), 1) == OClass::O2, "F(n) x Z in O2");
  });
}

// ---------------------------------------------------------------------------
CheckResult rinf_engine() {
  return run("golden rinf_engine", [](Golden& g) {
    for (int n : {2, 3}) {
      const std::string ns = std::to_string(n);
      expect_verdict(g, "main BS(1,n)", decide_main(parse_group_expr("BS(1," + ns + ")"), 1),
                     Conclusion::RInfinity, Rule::ThmMain1);
      expect_verdict(g, "main F(n) x Z", decide_main(parse_group_expr("F(" + ns + ") x Z"), 1),
                     Conclusion::IndexTwoSubgroupAllRInf, Rule::ThmMain2);
      expect_verdict(g, "main F(n)", decide_main(parse_group_expr("F(" + ns + ")"), 1), Conclusion::Unknown,
                     std::nullopt);
      expect_verdict(g, "gk T(n)", decide_gk(parse_group_expr("T(" + ns + ")")), Conclusion::RInfinity,
                     Rule::ThmGK2);
      expect_verdict(g, "product BS(1,2) x F(n)", decide_product(parse_group_expr("BS(1,2) x F(" + ns + ")"), 1),
                     Conclusion::RInfinity, std::nullopt);
      expect_verdict(g, "product F(n) x Z x F(2)",
                     decide_product(parse_group_expr("F(" + ns + ") x Z x F(2)"), 1),
                     Conclusion::IndexTwoSubgroupAllRInf, std::nullopt);
    }
    expect_verdict(g, "gk BS(1,2)", decide_gk(parse_group_expr("BS(1,2)")), Conclusion::RInfinity, Rule::ThmGK2);
    expect_verdict(g, "gk Klein", decide_gk(parse_group_expr("Klein")), Conclusion::Unknown, std::nullopt);
    expect_verdict(g, "free Zmod(2)*Zmod(2)", decide_free_product(parse_group_expr("Zmod(2) * Zmod(2)")),
                   Conclusion::RInfinity, Rule::ThmFreeProd1);
    for (int m : {2, 3})
      expect_verdict(g, "free BS(1,m)*Zmod(3)*Zmod(4)",
                     decide_free_product(parse_group_expr("BS(1," + std::to_string(m) + ") * Zmod(3) * Zmod(4)")),
                     Conclusion::RInfinity, Rule::ThmFreeProd2);
    expect_verdict(g, "free Klein*Z*Z*Zmod(3)", decide_free_product(parse_group_expr("Klein * Z * Z * Zmod(3)")),
                   Conclusion::RInfinity, Rule::ThmFreeProd3);
    expect_verdict(g, "product Z x Z", decide_product(parse_group_expr("Z x Z"), 1), Conclusion::Unknown,
                   std::nullopt);

    ExtensionSpec e1;
    e1.r_quotient = RValue::infinity();
    expect_verdict(g, "extension R(phibar)=inf", propagate_extension(e1), Conclusion::RInfinity, Rule::LemRFacts1);
    ExtensionSpec e2;
    e2.r_kernel = RValue::infinity();
    e2.fix_quotient_finite = true;
    expect_verdict(g, "extension Fix finite, R(phi')=inf", propagate_extension(e2), Conclusion::RInfinity,
                   Rule::LemRFacts2);
    ExtensionSpec e3;
    e3.central = true;
    e3.r_kernel = RValue::of(3);
    e3.r_quotient = RValue::of(2);
    e3.uniform_fibers = true;
    const Verdict v3 = propagate_extension(e3);
    expect_verdict(g, "extension central 3*2", v3, Conclusion::ReidemeisterValue, Rule::LemRFacts3);
    g.expect(v3.value == RValue::of(6), "central 3*2 = 6");
    e3.uniform_fibers = false;  // the bare product rule is unsound, see the extension oracle
    expect_verdict(g, "extension central without uniform fibers", propagate_extension(e3), Conclusion::Unknown,
                   std::nullopt);

    const Verdict ex41 = decide(parse_group_expr("BS(1,2) x F(3)"));
    expect_verdict(g, "decide BS(1,2) x F(3)", ex41, Conclusion::RInfinity, Rule::ThmMain1);
    g.expect(ex41.trace.size() >= 2 && ex41.trace[ex41.trace.size() - 2].rule == Rule::ThmProductFormula,
             "BS(1,2) x F(3): join step precedes ThmMain1");
    expect_verdict(g, "decide B(4)", decide(parse_group_expr("B(4)")), Conclusion::IndexTwoSubgroupAllRInf,
                   Rule::ThmMain2);
    expect_verdict(g, "decide Zmod(7)", decide(parse_group_expr("Zmod(7)")), Conclusion::Unknown, std::nullopt);
    for (const char* e : {"BS(1,2) x F(3)", "B(4)", "Klein * Z * Zmod(2)", "T(2)", "L(5)"}) {
      const auto bad = verify_trace(decide(parse_group_expr(e)));
      g.expect(!bad, std::string(e) + ": " + bad.value_or(""));
    }
  });
}

// ---------------------------------------------------------------------------
CheckResult reidemeister_abelian() {
  return run("golden reidemeister_abelian", [](Golden& g) {
    const IntMatrix m = mat({{2, 0}, {0, 3}});
    const auto f = smith_normal_form(m);
    g.expect(f.diagonal() == std::vector<BigInt>{1, 6}, "SNF diag(2,3) = diag(1,6)");
    g.expect(equal(multiply(multiply(f.U, m), f.V), f.D), "U M V = D");
    g.expect(abs_value(determinant(f.U)) == 1 && abs_value(determinant(f.V)) == 1, "U, V unimodular");
    g.expect(equal(smith_normal_form(mat({{1, 0}, {0, 1}})).D, mat({{1, 0}, {0, 1}})), "SNF identity");
    g.expect(equal(smith_normal_form(mat({{0}})).D, mat({{0}})), "SNF [[0]]");

    g.expect(reidemeister_number(FGAbelianAutomorphism::on_free(mat({{-1}}))) == RValue::of(2), "R(-1) = 2");
    g.expect(reidemeister_number(FGAbelianAutomorphism::on_free(mat({{1}}))).is_infinite(), "R(+1) = inf");
    g.expect(reidemeister_number(FGAbelianAutomorphism::on_free(mat({{2, 1}, {1, 1}}))) == RValue::of(1),
             "R([[2,1],[1,1]]) = 1");
    SmallMatrix cat(2, 2);
    cat << 2, 1, 1, 1;
    for (std::int64_t n : {5, 7}) g.expect(twisted_class_count_oracle(cat, n) == 1, "cat map orbit count mod N");

    g.expect(fixed_subgroup_trivial(FGAbelianAutomorphism::on_free(mat({{-1}}))), "Fix(-1) trivial");
    g.expect(!fixed_subgroup_trivial(FGAbelianAutomorphism::on_free(mat({{1}}))), "Fix(1) non-trivial");
    g.expect(!fixed_subgroup_trivial(FGAbelianAutomorphism::on_free(mat({{0, 1}, {1, 0}}))), "swap fixes (1,1)");

    // x -> -x on Z/4 moves a by 2s: classes {0,2}, {1,3}
    g.expect(brute_force_twisted_classes(FiniteGroupTable::cyclic(4), {0, 3, 2, 1}).count == 2, "Z/4, x->-x");
    g.expect(brute_force_twisted_classes(FiniteGroupTable::cyclic(5), {0, 2, 4, 1, 3}).count == 1, "Z/5, x->2x");
    for (const auto& grp : {FiniteGroupTable::dihedral(4), FiniteGroupTable::quaternion(),
                            FiniteGroupTable::dihedral(3), FiniteGroupTable::heisenberg(3)}) {
      std::vector<int> id(grp.order());
      for (int i = 0; i < grp.order(); ++i) id[i] = i;
      g.expect(brute_force_twisted_classes(grp, id).count == conjugacy_class_count(grp),
               "identity twisted classes = conjugacy classes (order " + std::to_string(grp.order()) + ")");
    }

    const auto z4 = FiniteGroupTable::cyclic(4);
    const auto rep = verify_central_extension(extension_from_subgroup(z4, {0, 2}, {0, 1, 2, 3}));
    g.expect(rep.valid && rep.r_total == 4 && rep.r_kernel == 2 && rep.r_quotient == 2 && rep.product_holds,
             "Z/2 -> Z/4 -> Z/2, identity: 4 = 2*2");
    const auto v4 = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(2));
    const auto rep2 = verify_central_extension(extension_from_subgroup(v4, {0, 1}, {0, 1, 2, 3}));
    g.expect(rep2.valid && rep2.product_holds, "Z/2 -> Z/2 x Z/2 -> Z/2, identity");
  });
}

// ---------------------------------------------------------------------------
CheckResult cayley_probe() {
  return run("golden cayley_probe", [](Golden& g) {
    const BallGraph z2 = enumerate_ball(GroupAtom::free_abelian(2), 2);
    g.expect(z2.size() == 13, "Z^2 r=2 has 13 vertices, got " + std::to_string(z2.size()));
    g.expect(enumerate_ball(GroupAtom::free_group(2), 2).size() == 17, "F(2) r=2 has 17 vertices");
    const BallGraph bs = enumerate_ball(GroupAtom::baumslag_solitar(2), 6);
    g.expect(bs.size() == 375, "BS(1,2) r=6 regression count 375, got " + std::to_string(bs.size()));

    const auto half = halfspace_subgraph(z2, Direction{1, 0}, 0);
    std::size_t right = 0;
    for (const auto& k : z2.keys) right += k[0] >= 0;
    g.expect(half.size() == right && right == 9, "Z^2 half diamond x >= 0");
    const auto up = halfspace_subgraph(bs, Direction{1}, 1);
    std::size_t above = 0;
    for (const auto& h : bs.heights) above += h[0] >= 1;
    g.expect(up.size() == above, "BS(1,2) t-height >= 1");
    g.expect(halfspace_subgraph(bs, Direction{1}, 7).empty(), "s beyond the height bound is empty");

    for (const auto& ball : {z2, bs})
      for (const Direction& d : {Direction::unit(ball.rank, 0, 1), Direction::unit(ball.rank, 0, -1)})
        g.expect(cone_subgraph(ball, d, 0) == halfspace_subgraph(ball, d, 0), "cone = half-space at s = 0");
    for (int s : {0, 1, 2, 3})
      for (const Direction& d : {Direction{1}, Direction{-1}})
        g.expect(cone_subgraph(bs, d, s) == halfspace_subgraph(bs, d, s), "m = 1 modes agree");
    g.expect(in_cone({1, 3}, Direction{0, 1}, 2), "(1,3) in cone about (0,1) at s=2");
    g.expect(!in_cone({2, 3}, Direction{0, 1}, 2), "(2,3) outside cone about (0,1) at s=2");

    const ProbeConfig half_cfg;
    ProbeConfig cone_cfg;
    cone_cfg.mode = ProbeMode::TruncatedCone;
    g.expect(connectivity_probe(bs, Direction{1}, half_cfg).evidence == Evidence::SupportsMembership,
             "BS(1,2) +t half-space membership");
    g.expect(connectivity_probe(bs, Direction{-1}, half_cfg).evidence == Evidence::SupportsNonMembership,
             "BS(1,2) -t half-space non-membership");
    const BallGraph f2 = enumerate_ball(GroupAtom::free_group(2), 6);
    g.expect(connectivity_probe(f2, Direction{1, 0}, half_cfg).evidence == Evidence::SupportsNonMembership,
             "F(2) +x non-membership");

    for (const auto& row : probe_direction_scan(GroupAtom::klein(), {Direction{1}, Direction{-1}}, half_cfg))
      g.expect(row.report.evidence == Evidence::SupportsMembership, "Klein " + row.report.gamma.str());
    for (const auto& row : probe_direction_scan(GroupAtom::free_abelian(2), default_probe_directions(2), cone_cfg))
      g.expect(row.report.evidence == Evidence::SupportsMembership, "Z^2 cone " + row.report.gamma.str());
    const auto bs_scan = probe_direction_scan(GroupAtom::baumslag_solitar(2), {Direction{1}, Direction{-1}}, cone_cfg);
    g.expect(bs_scan.size() == 2 && bs_scan[0].report.evidence == Evidence::SupportsMembership &&
                 bs_scan[1].report.evidence == Evidence::SupportsNonMembership,
             "BS(1,2) cone scan {+: member, -: not}");
  });
}

}  // namespace

std::vector<CheckResult> run_golden() {
  return {group_catalog(), sphere_algebra(), omega_engine(), rinf_engine(), reidemeister_abelian(), cayley_probe()};
}

}  // namespace bnsr::checks
