#include "checks.hpp"

#include "bnsr/catalog.hpp"
#include "bnsr/omega.hpp"
#include "bnsr/probe.hpp"
#include "bnsr/reidemeister.hpp"
#include "bnsr/rinf.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace bnsr::checks {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream log;

  // Records a failed expectation; keeps the first few messages.
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok || failures < 3) log << (failures ? "; " : "") << what;
    ok = false;
    ++failures;
  }
  int failures = 0;
};

CheckResult timed(std::string name, double budget, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream detail;
  if (out.failures > 3) detail << out.failures << " failures: ";
  detail << out.log.str();
  if (secs >= budget) {
    out.ok = false;
    detail << (detail.tellp() > 0 ? "; " : "") << "time " << secs << " s exceeds budget " << budget << " s";
  }
  return {std::move(name), out.ok, detail.str(), secs};
}

bool has_rule(const Verdict& v, Rule r) {
  return std::any_of(v.trace.begin(), v.trace.end(), [r](const TraceStep& s) { return s.rule == r; });
}

SphereSet set_of(std::vector<int> ranks, std::vector<JoinAtom> atoms) {
  return SphereSet(Decomposition(std::move(ranks)), std::move(atoms));
}

bool same_set(const SphereSet& a, const SphereSet& b) { return equivalent(a, b).value_or(false); }

// ---- 1 -------------------------------------------------------------------
CheckResult criterion_1() {
  return timed("1 Reidemeister basics: R(-1 on Z)=2, R(+1 on Z)=inf", 0.001, [](Outcome& o) {
    IntMatrix minus(1, 1), plus(1, 1);
    minus(0, 0) = -1;
    plus(0, 0) = 1;
    const RValue a = reidemeister_number(FGAbelianAutomorphism::on_free(minus));
    const RValue b = reidemeister_number(FGAbelianAutomorphism::on_free(plus));
    o.expect(a == RValue::of(2), "R(-1) = " + a.str());
    o.expect(b.is_infinite(), "R(+1) = " + b.str());
  });
}

// ---- 2 -------------------------------------------------------------------
CheckResult criterion_2() {
  return timed("2 Finite R iff trivial fixed subgroup, values vs orbit counts (random unimodular)", 10.0, [](Outcome& o) {
    std::mt19937_64 rng(0x5eed0002);
    constexpr int kSamples = 1200;
    constexpr std::int64_t kOrbitCap = 400'000;
    int finite = 0, compared = 0, skipped = 0;
    for (int i = 0; i < kSamples; ++i) {
      const int k = 1 + i % 4;
      const SmallMatrix f = random_unimodular(rng, k, 3);
      const auto phi = FGAbelianAutomorphism::on_free(cast_matrix<BigInt>(f));
      const bool trivial_fix = fixed_subgroup_trivial(phi);
      const RValue r = reidemeister_number(phi);
      o.expect(trivial_fix == !r.is_infinite(),
               "sample " + std::to_string(i) + ": Fix trivial=" + std::to_string(trivial_fix) + " but R=" + r.str());
      if (r.is_infinite()) continue;
      ++finite;
      // |det(1-F)| kills the cokernel; fall back to its exponent when the box is too big.
      SmallMatrix one_minus = SmallMatrix::Identity(k, k);
      one_minus -= f;
      const auto det = static_cast<std::int64_t>(abs_value(determinant(cast_matrix<BigInt>(one_minus))));
      auto box = [k](std::int64_t n) {
        std::int64_t s = 1;
        for (int j = 0; j < k && s <= kOrbitCap; ++j) s *= n;
        return s;
      };
      std::int64_t modulus = det;
      if (box(modulus) > kOrbitCap) {
        const auto inv = cokernel(cast_matrix<BigInt>(one_minus));
        modulus = inv.torsion.empty() ? 1 : static_cast<std::int64_t>(inv.torsion.back());
      }
      if (box(modulus) > kOrbitCap) {
        ++skipped;
        continue;
      }
      ++compared;
      const std::size_t count = twisted_class_count_oracle(f, modulus);
      o.expect(RValue::of(BigInt(count)) == r,
               "sample " + std::to_string(i) + ": R=" + r.str() + " but orbit count " + std::to_string(count));
    }
    o.expect(compared + skipped == finite, "bookkeeping");
    o.expect(skipped * 20 <= finite, "too many finite samples skipped: " + std::to_string(skipped));
    if (o.ok)
      o.log << kSamples << " samples, " << finite << " finite, " << compared << " orbit-checked, "
            << skipped << " skipped (quotient too large)";
  });
}

// ---- 3 -------------------------------------------------------------------
std::vector<std::pair<std::string, FiniteGroupTable>> extension_groups() {
  using T = FiniteGroupTable;
  return {{"Z/4", T::cyclic(4)},
          {"Z/6", T::cyclic(6)},
          {"Z/8", T::cyclic(8)},
          {"Z/9", T::cyclic(9)},
          {"Z/12", T::cyclic(12)},
          {"Z/2xZ/4", T::direct_product(T::cyclic(2), T::cyclic(4))},
          {"Q8", T::quaternion()},
          {"D4", T::dihedral(4)},
          {"Heis(3)", T::heisenberg(3)}};
}

// Non-trivial proper subgroups of the center, generated by one element.
std::vector<std::vector<int>> central_subgroups(const FiniteGroupTable& b) {
  std::set<std::vector<int>> subs;
  for (int z : b.center()) {
    auto h = b.closure({z});
    if (h.size() > 1 && static_cast<int>(h.size()) < b.order()) subs.insert(h);
  }
  return {subs.begin(), subs.end()};
}

CheckResult criterion_3() {
  return timed("3 Central-extension product R(phi)=R(phi')R(phibar)", 5.0, [](Outcome& o) {
    int cases = 0, holds = 0;
    std::string first_bad;
    for (const auto& [name, b] : extension_groups()) {
      const auto autos = b.automorphisms();
      for (const auto& a : central_subgroups(b))
        for (const auto& phi : autos) {
          const bool invariant = std::all_of(a.begin(), a.end(), [&](int x) {
            return std::binary_search(a.begin(), a.end(), phi[x]);
          });
          if (!invariant) continue;
          const ExtensionReport rep = verify_central_extension(extension_from_subgroup(b, a, phi));
          o.expect(rep.valid, name + ": constructed extension invalid: " + rep.problem);
          ++cases;
          if (rep.product_holds) {
            ++holds;
          } else if (first_bad.empty()) {
            first_bad = name + " with |A|=" + std::to_string(a.size()) + ": R(phi)=" +
                        std::to_string(rep.r_total) + " but R(phi')R(phibar)=" +
                        std::to_string(rep.r_kernel) + "*" + std::to_string(rep.r_quotient);
          }
        }
    }
    o.expect(cases >= 20, "only " + std::to_string(cases) + " extensions constructed");
    o.expect(holds == cases, std::to_string(cases - holds) + " of " + std::to_string(cases) +
                                 " central extensions violate the product formula, e.g. " + first_bad);
    if (o.ok) o.log << cases << " central extensions, all satisfy the product formula";
  });
}

// ---- 4 -------------------------------------------------------------------
CheckResult criterion_4() {
  return timed("4 Omega catalog reproduction for BS(1,n), BS(1,2) x F(n), F(n) x Z, B(n), Klein", 1.0, [](Outcome& o) {
    const Part plus = Part::finite({Direction{1}});
    const Part minus = Part::finite({Direction{-1}});
    const Part both = Part::finite({Direction{1}, Direction{-1}});
    for (int n : {2, 3, 4}) {
      const std::string ns = std::to_string(n);
      auto inv = [&](const std::string& e) { return lookup_invariants(parse_group_expr(e), 1); };

      const auto bs = inv("BS(1," + ns + ")");
      o.expect(same_set(bs.omega_at(1).set.value(), set_of({1}, {{plus}})), "Omega^1(BS(1," + ns + ")) != {+}");

      const auto ex1 = inv("BS(1,2) x F(" + ns + ")");
      o.expect(same_set(ex1.omega_at(1).set.value(), set_of({1, n}, {{plus, Part::empty()}})),
               "Omega^1(BS(1,2) x F(" + ns + ")) != {+inf}");
      o.expect(same_set(ex1.sigma1_complement.value(),
                        set_of({1, n}, {{minus, Part::empty()}, {Part::empty(), Part::full()}})),
               "[Sigma^1(BS(1,2) x F(" + ns + "))]^c != {-inf} u S^" + std::to_string(n - 1));

      const auto ex2 = inv("F(" + ns + ") x Z");
      o.expect(same_set(ex2.omega_at(1).set.value(), set_of({n, 1}, {{Part::empty(), both}})),
               "Omega^1(F(" + ns + ") x Z) != {+-inf}");
      o.expect(same_set(ex2.sigma1_complement.value(), set_of({n, 1}, {{Part::full(), Part::empty()}})),
               "[Sigma^1(F(" + ns + ") x Z)]^c != S^" + std::to_string(n - 1));

      for (const std::string& e : {"B(" + ns + ")", std::string("Klein")}) {
        const auto x = inv(e);
        o.expect(same_set(x.omega_at(1).set.value(), set_of({1}, {{both}})), "Omega^1(" + e + ") != {+-inf}");
        o.expect(same_set(x.sigma1_complement.value(), SphereSet::empty_sphere(1)),
                 "[Sigma^1(" + e + ")]^c not empty");
      }
    }
  });
}

// ---- 5 -------------------------------------------------------------------
CheckResult criterion_5() {
  return timed("5 Verdict reproduction with expected rules", 1.0, [](Outcome& o) {
    auto check = [&](const std::string& e, Conclusion want, Rule last, std::vector<Rule> also = {}) {
      const Verdict v = decide(parse_group_expr(e));
      o.expect(v.conclusion == want, e + ": got " + to_string(v.conclusion));
      o.expect(v.final_rule() == last,
               e + ": final rule " + (v.final_rule() ? to_string(*v.final_rule()) : "none") +
                   ", expected " + to_string(last));
      for (Rule r : also) o.expect(has_rule(v, r), e + ": trace lacks " + std::string(to_string(r)));
      if (auto bad = verify_trace(v)) o.expect(false, e + ": trace does not replay: " + *bad);
    };
    for (int n : {2, 3, 4}) {
      const std::string ns = std::to_string(n);
      check("BS(1," + ns + ")", Conclusion::RInfinity, Rule::ThmMain1);
      check("BS(1,2) x F(" + ns + ")", Conclusion::RInfinity, Rule::ThmMain1, {Rule::ThmProductFormula});
      check("BS(1," + ns + ") * Zmod(3) * Zmod(4)", Conclusion::RInfinity, Rule::ThmFreeProd2);
      check("F(" + ns + ") x Z", Conclusion::IndexTwoSubgroupAllRInf, Rule::ThmMain2,
            {Rule::ThmProductFormula});
    }
    check("Klein * Z * Zmod(2)", Conclusion::RInfinity, Rule::ThmFreeProd3);
    check("Zmod(2) * Zmod(2)", Conclusion::RInfinity, Rule::ThmFreeProd1);
  });
}

// ---- 6 -------------------------------------------------------------------
CheckResult criterion_6() {
  return timed("6 Known-examples table (#Omega^n vs source of R_infinity)", 1.0, [](Outcome& o) {
    struct Row {
      std::string expr;
      std::optional<std::size_t> count;  // empty = infinite
      Conclusion conclusion;
      Rule source;
    };
    const std::vector<Row> rows{
        {"F(2)", 0, Conclusion::RInfinity, Rule::CatalogFact},
        {"F(3)", 0, Conclusion::RInfinity, Rule::CatalogFact},
        {"L(2)", 0, Conclusion::RInfinity, Rule::CatalogFact},
        {"L(3)", 0, Conclusion::RInfinity, Rule::CatalogFact},
        {"L(4)", 0, Conclusion::RInfinity, Rule::CatalogFact},
        {"L(6)", 0, Conclusion::RInfinity, Rule::CatalogFact},
        {"Zmod(2) * Zmod(3)", 0, Conclusion::RInfinity, Rule::ThmFreeProd1},
        {"BS(1,2) * Zmod(5)", 0, Conclusion::RInfinity, Rule::ThmFreeProd2},
        {"Klein * Z * Zmod(2)", 0, Conclusion::RInfinity, Rule::ThmFreeProd3},
        {"BS(1,2)", 1, Conclusion::RInfinity, Rule::ThmMain1},
        {"BS(1,3)", 1, Conclusion::RInfinity, Rule::ThmMain1},
        {"BS(1,5)", 1, Conclusion::RInfinity, Rule::ThmMain1},
        {"F(2) x Z", 2, Conclusion::IndexTwoSubgroupAllRInf, Rule::ThmMain2},
        {"F(3) x Z", 2, Conclusion::IndexTwoSubgroupAllRInf, Rule::ThmMain2},
        {"B(3)", 2, Conclusion::IndexTwoSubgroupAllRInf, Rule::ThmMain2},
        {"Klein", 2, Conclusion::RInfinity, Rule::CatalogFact},
        {"T(2)", std::nullopt, Conclusion::RInfinity, Rule::CatalogFact},
        {"T(3)", std::nullopt, Conclusion::RInfinity, Rule::CatalogFact},
        {"Klein x Z", std::nullopt, Conclusion::RInfinity, Rule::CatalogFact},
        {"Klein x Z^2", std::nullopt, Conclusion::RInfinity, Rule::CatalogFact},
        {"Klein x Z^3", std::nullopt, Conclusion::RInfinity, Rule::CatalogFact},
    };
    for (const auto& r : rows) {
      const GroupExpr g = parse_group_expr(r.expr);
      const LevelFact lf = lookup_invariants(g, 1).omega_at(1);
      if (!lf.set) {
        o.expect(false, r.expr + ": Omega^1 unknown");
        continue;
      }
      const Cardinality c = cardinality(*lf.set);
      if (r.count) {
        o.expect(c.kind != Cardinality::Kind::Infinite && c.count() == *r.count,
                 r.expr + ": #Omega^1 = " + (c.kind == Cardinality::Kind::Infinite ? "inf" : std::to_string(c.count())));
        if (*r.count == 2) o.expect(is_antipodal_pair(*lf.set), r.expr + ": points not antipodal");
      } else {
        o.expect(c.kind == Cardinality::Kind::Infinite, r.expr + ": #Omega^1 finite");
      }
      const Verdict v = decide(g);
      o.expect(v.conclusion == r.conclusion, r.expr + ": verdict " + to_string(v.conclusion));
      o.expect(v.final_rule() == r.source, r.expr + ": source " +
                                               (v.final_rule() ? to_string(*v.final_rule()) : "none"));
    }
  });
}

// ---- 7 -------------------------------------------------------------------
CheckResult criterion_7() {
  return timed("7 Finite Omega has 1 point or 2 antipodal points (random products)", 30.0, [](Outcome& o) {
    std::mt19937_64 rng(0x5eed0007);
    std::size_t checked = 0, finite = 0;
    auto gate = [&](const SphereSet& s, const std::string& where) {
      const Finite12Report r = check_finite12(s);
      ++checked;
      finite += r.kind == Cardinality::Kind::Finite;
      o.expect(r.ok, where + ": " + r.message);
    };
    while (checked < 12'000) {
      const GroupExpr g = random_group_expr(rng);
      const KnownInvariants inv = lookup_invariants(g, 3);
      for (const auto& [n, lf] : inv.omega)
        if (lf.set) gate(*lf.set, g.str() + " level " + std::to_string(n));
      o.expect(!monotonicity_violation(inv), g.str() + ": Omega levels not nested");
      // re-join factor data in reverse order through the product formula
      if (g.node() == GroupExpr::Node::DirectProduct) {
        std::vector<std::optional<SphereSet>> parts;
        for (auto it = g.factors().rbegin(); it != g.factors().rend(); ++it)
          parts.push_back(lookup_invariants(*it, 1).omega_at(1).set);
        if (auto s = omega_of_product(parts)) gate(*s, g.str() + " reversed");
      }
    }
    if (o.ok) o.log << checked << " Omega sets checked, " << finite << " finite non-empty";
  });
}

// ---- 8 -------------------------------------------------------------------
CheckResult criterion_8() {
  return timed("8 Cone engine vs brute-force lattice enumeration", 30.0, [](Outcome& o) {
    std::mt19937_64 rng(0x5eed0008);
    constexpr int kBound = 5;
    int targeted = 0, tried = 0;
    std::vector<std::vector<Direction>> pools(4);
    for (int m = 1; m <= 3; ++m) pools[m] = lattice_directions(m, m == 3 ? 1 : 2);
    while (tried < 3000) {
      ++tried;
      const int m = 1 + tried % 3;
      const auto& pool = pools[m];
      std::vector<Direction> fs;
      const int count = std::uniform_int_distribution<int>(1, 2 * m + 1)(rng);
      for (int i = 0; i < count; ++i)
        fs.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);

      const SphereSet omega = omega_from_sigma_complement(SphereSet::points(m, fs), m);
      const std::vector<Direction> brute = brute_force_cone_points(fs, m, kBound);
      const bool brute_small = brute.size() == 0 || brute.size() == 1 ||
                               (brute.size() == 2 && brute[0] == -brute[1]);
      const Cardinality c = cardinality(omega);
      const bool engine_small = c.kind != Cardinality::Kind::Infinite;
      std::string tag = "m=" + std::to_string(m) + " F={";
      for (const auto& f : fs) tag += f.str();
      tag += "}";
      o.expect(brute_small == engine_small, tag + ": engine and enumeration disagree on finiteness");
      if (!brute_small || !engine_small) continue;
      ++targeted;
      std::vector<Direction> eng = c.points;
      std::vector<Direction> bru = canonical_points(brute);
      o.expect(eng == bru, tag + ": engine points differ from enumeration");
    }
    o.expect(targeted >= 100, "only " + std::to_string(targeted) + " Trivial/SingleRay/Line cases sampled");
    if (o.ok) o.log << targeted << " Trivial/SingleRay/Line cases agree (" << tried << " sets sampled)";
  });
}

// ---- 9 -------------------------------------------------------------------
CheckResult criterion_9() {
  return timed("9 Cayley probe agrees with catalog Sigma^1/Omega^1", 60.0, [](Outcome& o) {
    const std::vector<std::pair<std::string, GroupAtom>> atoms{{"Z^2", GroupAtom::free_abelian(2)},
                                                               {"F(2)", GroupAtom::free_group(2)},
                                                               {"BS(1,2)", GroupAtom::baumslag_solitar(2)},
                                                               {"Klein", GroupAtom::klein()}};
    int probes = 0;
    for (const auto& [name, atom] : atoms) {
      const int rank = hom_rank(GroupExpr(atom));
      std::vector<Direction> dirs;
      if (atom.kind == GroupAtom::Kind::FreeAbelian) {
        dirs = default_probe_directions(rank);  // 8 compass directions
      } else {
        for (int i = 0; i < rank; ++i) {
          dirs.push_back(Direction::unit(rank, i, 1));
          dirs.push_back(Direction::unit(rank, i, -1));
        }
      }
      for (int r : {6, 8})
        for (ProbeMode mode : {ProbeMode::HalfSpace, ProbeMode::TruncatedCone}) {
          ProbeConfig cfg;
          cfg.radius = r;
          cfg.mode = mode;
          for (const ScanRow& row : probe_direction_scan(atom, dirs, cfg)) {
            ++probes;
            const std::string at = name + " r=" + std::to_string(r) + " " + to_string(mode) + " " +
                                   row.report.gamma.str();
            o.expect(row.catalog_member.has_value(), at + ": no catalog value");
            o.expect(!row.warn, at + ": WARN, probe says " + to_string(row.report.evidence));
          }
        }
    }
    if (o.ok) o.log << probes << " probes, 0 WARN";
  });
}

// ---- 10 ------------------------------------------------------------------
CheckResult criterion_10() {
  return timed("10 Join algebra laws on random sets", 30.0, [](Outcome& o) {
    std::mt19937_64 rng(0x5eed0010);
    auto rank = [&] { return std::uniform_int_distribution<int>(0, 3)(rng); };
    std::size_t cases = 0;
    std::vector<std::vector<Direction>> samples(7);
    for (int m = 1; m <= 6; ++m) samples[m] = lattice_directions(m, 1);

    // Omega^1(Z) * Omega^1(Z) is the whole circle
    const SphereSet pm = SphereSet::points(1, {Direction{1}, Direction{-1}});
    o.expect(is_full(join(pm, pm)), "Omega^1(Z) * Omega^1(Z) is not S^1");
    ++cases;

    while (cases < 12'000) {
      const SphereSet a = random_factor_set(rng, rank());
      const SphereSet b = random_factor_set(rng, rank());
      const SphereSet c = random_factor_set(rng, rank());
      const int ra = a.dim(), rb = b.dim();
      std::string tag = describe(a) + " | " + describe(b) + " | " + describe(c);

      // associativity
      const SphereSet left = join(join(a, b), c), right = join(a, join(b, c));
      o.expect(equivalent(left, right) == true, "associativity fails: " + tag);
      ++cases;

      // commutativity up to the factor swap
      const SphereSet ab = join(a, b), ba = join(b, a);
      o.expect(equivalent(ab, permute_factors(ba, {1, 0})) == true, "commutativity fails: " + tag);
      ++cases;

      // empty set is the identity: membership and cardinality survive embedding
      const int re = 1 + rank();
      const SphereSet ea = join(SphereSet::empty_sphere(re), a);
      const Cardinality ca = cardinality(a), cea = cardinality(ea);
      o.expect(ca.kind == cea.kind && ca.count() == cea.count(), "empty join changes cardinality: " + tag);
      if (ra > 0)
        for (const Direction& d : samples[ra])
          o.expect(member(d, a) == member(embed(d, ea.ambient(), 1), ea),
                   "empty join changes membership of " + d.str() + ": " + tag);
      ++cases;

      // cardinality rule: both sides non-empty => infinite, witnessed on the arc
      const Cardinality cab = cardinality(ab);
      const bool both = !a.is_empty() && !b.is_empty();
      if (both) {
        o.expect(cab.kind == Cardinality::Kind::Infinite, "join of non-empty sets is finite: " + tag);
        const Direction u = embed(cardinality(a).kind == Cardinality::Kind::Finite
                                      ? cardinality(a).points.front()
                                      : *std::find_if(samples[ra].begin(), samples[ra].end(),
                                                      [&](const Direction& d) { return member(d, a); }),
                                  ab.ambient(), 0);
        const Direction v = embed(cardinality(b).kind == Cardinality::Kind::Finite
                                      ? cardinality(b).points.front()
                                      : *std::find_if(samples[rb].begin(), samples[rb].end(),
                                                      [&](const Direction& d) { return member(d, b); }),
                                  ab.ambient(), 1);
        std::set<Direction> arc;
        for (std::int64_t s : {1, 2, 3})
          for (std::int64_t t : {1, 2, 3}) {
            const Direction w(SmallVector(s * u.coords() + t * v.coords()));
            o.expect(member(w, ab), "arc point " + w.str() + " missing from join: " + tag);
            arc.insert(w);
          }
        o.expect(arc.size() >= 3, "arc sampling degenerate: " + tag);
      } else {
        o.expect(cab.kind == (a.is_empty() ? cardinality(b).kind : ca.kind) &&
                     cab.count() == (a.is_empty() ? cardinality(b).count() : ca.count()),
                 "join with an empty side changes cardinality: " + tag);
      }
      ++cases;
    }
    if (o.ok) o.log << cases << " law instances checked";
  });
}

}  // namespace

CheckResult acceptance(int id) {
  switch (id) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  for (int i = 1; i <= 10; ++i) out.push_back(acceptance(i));
  return out;
}

}  // namespace bnsr::checks
