#include "bnsr/rinf.hpp"

#include "bnsr/omega.hpp"

#include <algorithm>
#include <set>

namespace bnsr {

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::RInfinity: return "RInfinity";
    case Conclusion::IndexTwoSubgroupAllRInf: return "IndexTwoSubgroupAllRInf";
    case Conclusion::FiniteIndexSubgroupAllRInf: return "FiniteIndexSubgroupAllRInf";
    case Conclusion::ReidemeisterValue: return "ReidemeisterValue";
    case Conclusion::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Rule r) {
  switch (r) {
    case Rule::CatalogFact: return "CatalogFact";
    case Rule::ThmOmegaFromSigma: return "ThmOmegaFromSigma";
    case Rule::ThmProductFormula: return "ThmProductFormula";
    case Rule::FreeProductSigma: return "FreeProductSigma";
    case Rule::ThmMain1: return "ThmMain1";
    case Rule::ThmMain2: return "ThmMain2";
    case Rule::ThmGK1: return "ThmGK1";
    case Rule::ThmGK2: return "ThmGK2";
    case Rule::ThmFreeProd1: return "ThmFreeProd1";
    case Rule::ThmFreeProd2: return "ThmFreeProd2";
    case Rule::ThmFreeProd3: return "ThmFreeProd3";
    case Rule::ThmSec5Prod1: return "ThmSec5Prod1";
    case Rule::ThmSec5Prod2: return "ThmSec5Prod2";
    case Rule::LemRFacts1: return "LemRFacts1";
    case Rule::LemRFacts2: return "LemRFacts2";
    case Rule::LemRFacts3: return "LemRFacts3";
  }
  return "?";
}

const char* rule_statement(Rule r) {
  switch (r) {
    case Rule::CatalogFact: return "stored fact with literature citation";
    case Rule::ThmOmegaFromSigma:
      return "e is in Omega^n iff every direction at angle < pi/2 from e is in Sigma^n";
    case Rule::ThmProductFormula:
      return "Omega^n(G x H) is the spherical join of Omega^n(G) and Omega^n(H); "
             "[Sigma^1(G x H)]^c is the union of the embedded factor complements";
    case Rule::FreeProductSigma:
      return "a free product of two or more non-trivial groups has empty Sigma^1";
    case Rule::ThmMain1: return "type F_n and Omega^n a single rational point imply R_infinity";
    case Rule::ThmMain2:
      return "type F_n and Omega^n two antipodal rational points give an index 2 subgroup of "
             "Aut(G) on which R is infinite";
    case Rule::ThmGK1:
      return "[Sigma^1]^c finite, non-empty and rational gives a finite index subgroup of Aut(G) "
             "on which R is infinite";
    case Rule::ThmGK2:
      return "if those points also form a basis of Hom(G/N, R), N the intersection of their "
             "kernels, then G has R_infinity";
    case Rule::ThmFreeProd1: return "a free product of finite groups has R_infinity";
    case Rule::ThmFreeProd2:
      return "one factor in O^m_1 and every other factor in some O^k_0 with k <= m imply "
             "R_infinity for the free product";
    case Rule::ThmFreeProd3:
      return "if the direct product of the factors has R_infinity and some factor is abelian "
             "and not Z, the free product has R_infinity";
    case Rule::ThmSec5Prod1: return "H in O^n_1 and K in O^m_0 with m <= n imply H x K has R_infinity";
    case Rule::ThmSec5Prod2:
      return "H in O^n_2 and K in O^m_0 with m <= n give an index 2 subgroup of Aut(H x K) on "
             "which R is infinite";
    case Rule::LemRFacts1:
      return "for a characteristic subgroup, R(induced automorphism of the quotient) infinite "
             "implies R infinite";
    case Rule::LemRFacts2: return "Fix(phibar) finite and R(phi') infinite imply R(phi) infinite";
    case Rule::LemRFacts3:
      return "central extension whose fibers all carry R(phi') classes: R(phi) = R(phi') R(phibar)";
  }
  return "?";
}

int Verdict::strength() const {
  switch (conclusion) {
    case Conclusion::RInfinity: return 3;
    case Conclusion::IndexTwoSubgroupAllRInf:
    case Conclusion::FiniteIndexSubgroupAllRInf: return 2;
    case Conclusion::ReidemeisterValue: return 1;
    case Conclusion::Unknown: return 0;
  }
  return 0;
}

std::optional<Rule> Verdict::final_rule() const {
  if (trace.empty()) return std::nullopt;
  return trace.back().rule;
}

namespace {

class Trace {
 public:
  int add(Rule r, std::string subject, std::string claim, std::vector<int> premises = {}) {
    const int id = static_cast<int>(steps.size());
    steps.push_back({id, r, std::move(subject), std::move(claim), std::move(premises)});
    return id;
  }

  // Appends another trace, renumbering ids; returns the id of its last step.
  int append(const std::vector<TraceStep>& other) {
    const int shift = static_cast<int>(steps.size());
    for (TraceStep s : other) {
      s.id += shift;
      for (int& p : s.premises) p += shift;
      steps.push_back(std::move(s));
    }
    return static_cast<int>(steps.size()) - 1;
  }

  std::vector<TraceStep> steps;
};

Verdict unknown(std::string note) {
  Verdict v;
  v.notes.push_back(std::move(note));
  return v;
}

Verdict conclude(Conclusion c, Trace t) {
  Verdict v;
  v.conclusion = c;
  v.trace = std::move(t.steps);
  return v;
}

std::string level(int n) { return std::to_string(n); }

std::optional<int> derive_sigma(Trace& t, const GroupExpr& g) {
  const KnownInvariants inv = lookup_invariants(g, 1);
  if (!inv.sigma1_complement) return std::nullopt;
  const std::string claim = "[Sigma^1]^c = " + describe(*inv.sigma1_complement);
  switch (g.node()) {
    case GroupExpr::Node::Atom: return t.add(Rule::CatalogFact, g.str(), claim);
    case GroupExpr::Node::FreeProduct: return t.add(Rule::FreeProductSigma, g.str(), claim);
    case GroupExpr::Node::DirectProduct: {
      std::vector<int> prem;
      for (const auto& f : g.factors()) {
        auto id = derive_sigma(t, f);
        if (!id) return std::nullopt;
        prem.push_back(*id);
      }
      return t.add(Rule::ThmProductFormula, g.str(), claim, prem);
    }
  }
  return std::nullopt;
}

std::string omega_claim(const LevelFact& lf, int n) {
  if (lf.set) return "Omega^" + level(n) + " = " + describe(*lf.set);
  return "Omega^" + level(n) + " is infinite";
}

std::optional<int> derive_omega(Trace& t, const GroupExpr& g, int n) {
  const KnownInvariants inv = lookup_invariants(g, n);
  const LevelFact& lf = inv.omega_at(n);
  if (!lf.set && !lf.infinite) return std::nullopt;
  const std::string claim = omega_claim(lf, n);

  switch (g.node()) {
    case GroupExpr::Node::Atom:
      if (lf.provenance == "ThmOmegaFromSigma") {
        auto sid = derive_sigma(t, g);
        return t.add(Rule::ThmOmegaFromSigma, g.str(), claim, {*sid});
      }
      return t.add(Rule::CatalogFact, g.str(), claim);
    case GroupExpr::Node::FreeProduct: {
      auto sid = derive_sigma(t, g);
      return t.add(Rule::ThmOmegaFromSigma, g.str(), claim, {*sid});
    }
    case GroupExpr::Node::DirectProduct: {
      std::vector<int> prem;
      for (const auto& f : g.factors())
        if (auto id = derive_omega(t, f, n)) prem.push_back(*id);
      if (prem.empty()) return std::nullopt;
      return t.add(Rule::ThmProductFormula, g.str(), claim, prem);
    }
  }
  return std::nullopt;
}

GroupExpr sub_product(const std::vector<GroupExpr>& fs) {
  return fs.size() == 1 ? fs.front() : GroupExpr::direct(fs);
}

bool torsion_free(const GroupExpr& g) {
  if (!g.is_atom())
    return std::all_of(g.factors().begin(), g.factors().end(), torsion_free);
  if (g.trivial()) return true;
  using K = GroupAtom::Kind;
  switch (g.atom().kind) {
    case K::Lamplighter:
    case K::FiniteCyclic:
    case K::FiniteTable: return false;
    default: return true;
  }
}

bool isomorphic_to_z(const GroupExpr& g) {
  if (!g.abelian() || hom_rank(g) != 1) return false;
  if (g.is_atom()) return g.atom().kind == GroupAtom::Kind::FreeAbelian;
  return std::all_of(g.factors().begin(), g.factors().end(),
                     [](const GroupExpr& f) { return !f.finite() || f.trivial(); });
}

// Least level k <= m with g in O^k_0.
std::optional<int> o0_level(const GroupExpr& g, int m) {
  const KnownInvariants inv = lookup_invariants(g, m);
  for (int k = 1; k <= m; ++k)
    if (inv.o_class(k) == OClass::O0) return k;
  return std::nullopt;
}

void keep_stronger(Verdict& best, Verdict cand) {
  if (cand.strength() > best.strength()) {
    cand.notes.insert(cand.notes.begin(), best.notes.begin(), best.notes.end());
    best = std::move(cand);
  } else if (best.conclusion == Conclusion::Unknown) {
    best.notes.insert(best.notes.end(), cand.notes.begin(), cand.notes.end());
  }
}

}  // namespace

Verdict decide_catalog(const GroupExpr& g) {
  const KnownInvariants inv = lookup_invariants(g, 1);
  if (!inv.rinf_citation) return unknown("CatalogFact: no stored R_infinity fact for " + g.str());
  Trace t;
  t.add(Rule::CatalogFact, g.str(), "has property R_infinity: " + *inv.rinf_citation);
  return conclude(Conclusion::RInfinity, std::move(t));
}

Verdict decide_main(const GroupExpr& g, int n) {
  const KnownInvariants inv = lookup_invariants(g, n);
  const LevelFact& lf = inv.omega_at(n);
  if (n > inv.finiteness_type)
    return unknown("ThmMain: " + g.str() + " is not of type F_" + level(n));
  if (!lf.set)
    return unknown("ThmMain: Omega^" + level(n) + "(" + g.str() + ") " +
                   (lf.infinite ? "is infinite" : "is unknown"));
  const Cardinality c = cardinality(*lf.set);
  const bool one = c.kind == Cardinality::Kind::Finite && c.count() == 1;
  const bool pair = is_antipodal_pair(*lf.set);
  if (!one && !pair) {
    std::string size = c.kind == Cardinality::Kind::Zero       ? "empty"
                       : c.kind == Cardinality::Kind::Infinite ? "infinite"
                                                               : std::to_string(c.count()) + " points";
    return unknown("ThmMain: Omega^" + level(n) + "(" + g.str() + ") is " + size);
  }
  Trace t;
  const int oid = *derive_omega(t, g, n);
  if (one) {
    t.add(Rule::ThmMain1, g.str(), "has property R_infinity", {oid});
    return conclude(Conclusion::RInfinity, std::move(t));
  }
  t.add(Rule::ThmMain2, g.str(), "Aut(G) has an index 2 subgroup whose elements all have R = infinity",
        {oid});
  return conclude(Conclusion::IndexTwoSubgroupAllRInf, std::move(t));
}

Verdict decide_gk(const GroupExpr& g) {
  const KnownInvariants inv = lookup_invariants(g, 1);
  if (!inv.sigma1_complement) return unknown("ThmGK: [Sigma^1(" + g.str() + ")]^c is unknown");
  const Cardinality c = cardinality(*inv.sigma1_complement);
  if (c.kind != Cardinality::Kind::Finite)
    return unknown("ThmGK: [Sigma^1(" + g.str() + ")]^c is " +
                   (c.kind == Cardinality::Kind::Zero ? "empty" : "infinite"));

  Trace t;
  const int sid = *derive_sigma(t, g);
  const int gk1 = t.add(Rule::ThmGK1, g.str(),
                        "Aut(G) has a finite index subgroup whose elements all have R = infinity",
                        {sid});

  IntMatrix chars(static_cast<Eigen::Index>(c.count()), inv.hom_rank);
  for (std::size_t i = 0; i < c.count(); ++i)
    for (Eigen::Index j = 0; j < inv.hom_rank; ++j)
      chars(static_cast<Eigen::Index>(i), j) = c.points[i][j];
  // G/N is the image of G under the characters, free abelian of rank = rank(chars);
  // the characters form a basis of Hom(G/N, R) iff that rank equals their count.
  if (smith_rank(chars) == c.count()) {
    t.add(Rule::ThmGK2, g.str(), "has property R_infinity", {sid, gk1});
    return conclude(Conclusion::RInfinity, std::move(t));
  }
  Verdict v = conclude(Conclusion::FiniteIndexSubgroupAllRInf, std::move(t));
  v.notes.push_back("ThmGK2: the " + std::to_string(c.count()) +
                    " characters are not linearly independent");
  return v;
}

Verdict decide_product(const GroupExpr& g, int n, const DecideOptions&) {
  if (g.node() != GroupExpr::Node::DirectProduct)
    return unknown("ThmSec5Prod: " + g.str() + " is not a direct product");
  const auto& fs = g.factors();
  const std::size_t k = fs.size();
  if (k > 12) return unknown("ThmSec5Prod: too many factors to split");

  std::optional<std::tuple<GroupExpr, GroupExpr, int, bool>> pick;  // H, K, m, H in O^n_1
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    std::vector<GroupExpr> hs, ks;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? hs : ks).push_back(fs[i]);
    const GroupExpr h = sub_product(hs), kk = sub_product(ks);
    const OClass hc = lookup_invariants(h, n).o_class(n);
    if (hc != OClass::O1 && hc != OClass::O2) continue;
    auto m = o0_level(kk, n);
    if (!m) continue;
    const bool o1 = hc == OClass::O1;
    if (!pick || (o1 && !std::get<3>(*pick))) pick.emplace(h, kk, *m, o1);
    if (o1) break;
  }
  if (!pick) {
    Verdict v = decide_main(g, n);
    v.notes.insert(v.notes.begin(), "ThmSec5Prod: no split H x K with H in O^" + level(n) +
                                        "_1 or O^" + level(n) + "_2 and K in O^m_0, m <= " + level(n));
    return v;
  }
  const auto& [h, kk, m, o1] = *pick;
  Trace t;
  const int hid = *derive_omega(t, h, n);
  const int kid = *derive_omega(t, kk, m);
  const std::string cls = o1 ? "O^" + level(n) + "_1" : "O^" + level(n) + "_2";
  const std::string where = "H = " + h.str() + " in " + cls + ", K = " + kk.str() + " in O^" + level(m) + "_0";
  if (o1) {
    t.add(Rule::ThmSec5Prod1, g.str(), "has property R_infinity (" + where + ")", {hid, kid});
    return conclude(Conclusion::RInfinity, std::move(t));
  }
  t.add(Rule::ThmSec5Prod2, g.str(),
        "Aut(G) has an index 2 subgroup whose elements all have R = infinity (" + where + ")",
        {hid, kid});
  return conclude(Conclusion::IndexTwoSubgroupAllRInf, std::move(t));
}

Verdict decide_torsion_quotient(const GroupExpr& g, const DecideOptions& opt) {
  if (g.node() != GroupExpr::Node::DirectProduct)
    return unknown("LemRFacts1: " + g.str() + " is not a direct product");
  std::vector<GroupExpr> finite, infinite;
  for (const auto& f : g.factors()) {
    if (f.trivial()) continue;
    (f.finite() ? finite : infinite).push_back(f);
  }
  if (finite.empty() || infinite.empty())
    return unknown("LemRFacts1: " + g.str() + " has no split into finite and infinite factors");
  for (const auto& f : infinite)
    if (!torsion_free(f))
      return unknown("LemRFacts1: infinite factor " + f.str() + " has torsion");

  const GroupExpr q = sub_product(infinite);
  Verdict sub = decide(q, opt);
  if (sub.conclusion != Conclusion::RInfinity)
    return unknown("LemRFacts1: quotient " + q.str() + " is not known to have R_infinity");
  Trace t;
  const int last = t.append(sub.trace);
  t.add(Rule::LemRFacts1, g.str(),
        "has property R_infinity: the torsion subgroup " + sub_product(finite).str() +
            " is characteristic and the quotient " + q.str() + " has R_infinity",
        {last});
  return conclude(Conclusion::RInfinity, std::move(t));
}

Verdict decide_free_product(const GroupExpr& g, const DecideOptions& opt) {
  if (g.node() != GroupExpr::Node::FreeProduct)
    return unknown("ThmFreeProd: " + g.str() + " is not a free product");
  const auto& fs = g.factors();
  for (const auto& f : fs)
    if (f.trivial() || !f.freely_indecomposable())
      return unknown("ThmFreeProd: hypothesis violation: factor " + f.str() +
                     " is not a non-trivial freely indecomposable group");

  // (1) all factors finite
  if (std::all_of(fs.begin(), fs.end(), [](const GroupExpr& f) { return f.finite(); })) {
    Trace t;
    std::vector<int> prem;
    for (const auto& f : fs) prem.push_back(t.add(Rule::CatalogFact, f.str(), "is finite"));
    t.add(Rule::ThmFreeProd1, g.str(), "has property R_infinity (all factors finite)", prem);
    return conclude(Conclusion::RInfinity, std::move(t));
  }

  std::vector<std::string> notes;
  // (2) one factor in O^m_1, the others in O^k_0 with k <= m
  for (int m = 1; m <= opt.max_level; ++m)
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (lookup_invariants(fs[i], m).o_class(m) != OClass::O1) continue;
      std::vector<int> levels;
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (j == i) continue;
        auto k = o0_level(fs[j], m);
        if (!k) break;
        levels.push_back(*k);
      }
      if (levels.size() + 1 != fs.size()) continue;
      Trace t;
      std::vector<int> prem{*derive_omega(t, fs[i], m)};
      for (std::size_t j = 0, l = 0; j < fs.size(); ++j)
        if (j != i) prem.push_back(*derive_omega(t, fs[j], levels[l++]));
      t.add(Rule::ThmFreeProd2, g.str(),
            "has property R_infinity (" + fs[i].str() + " in O^" + level(m) + "_1, others in O^k_0)",
            prem);
      return conclude(Conclusion::RInfinity, std::move(t));
    }
  notes.push_back("ThmFreeProd2: no factor in O^m_1 with all others in O^k_0, k <= m");

  // (3) direct product has R_infinity and an abelian factor other than Z
  auto ab = std::find_if(fs.begin(), fs.end(),
                         [](const GroupExpr& f) { return f.abelian() && !isomorphic_to_z(f); });
  if (ab == fs.end()) {
    notes.push_back("ThmFreeProd3: no abelian factor other than Z");
  } else {
    const GroupExpr direct = GroupExpr::direct(fs);
    Verdict sub = decide(direct, opt);
    if (sub.conclusion == Conclusion::RInfinity) {
      Trace t;
      const int last = t.append(sub.trace);
      const int abid = t.add(Rule::CatalogFact, ab->str(), "is abelian and not isomorphic to Z");
      t.add(Rule::ThmFreeProd3, g.str(),
            "has property R_infinity (" + direct.str() + " has R_infinity)", {last, abid});
      return conclude(Conclusion::RInfinity, std::move(t));
    }
    notes.push_back("ThmFreeProd3: unverified, R_infinity of " + direct.str() + " is not established");
  }
  Verdict v;
  v.notes = std::move(notes);
  return v;
}

Verdict decide(const GroupExpr& g, const DecideOptions& opt) {
  Verdict best;
  if (opt.use_catalog_rinf) keep_stronger(best, decide_catalog(g));
  for (int n = 1; n <= opt.max_level; ++n) keep_stronger(best, decide_main(g, n));
  keep_stronger(best, decide_gk(g));
  if (g.node() == GroupExpr::Node::DirectProduct) {
    for (int n = 1; n <= opt.max_level; ++n) keep_stronger(best, decide_product(g, n, opt));
    keep_stronger(best, decide_torsion_quotient(g, opt));
  }
  if (g.node() == GroupExpr::Node::FreeProduct) keep_stronger(best, decide_free_product(g, opt));
  if (best.conclusion != Conclusion::Unknown) best.notes.clear();
  // drop repeated notes from the level sweep
  std::vector<std::string> seen;
  for (auto& n : best.notes)
    if (std::find(seen.begin(), seen.end(), n) == seen.end()) seen.push_back(n);
  best.notes = std::move(seen);
  return best;
}

Verdict propagate_extension(const ExtensionSpec& ext) {
  Trace t;
  auto premise = [&](const char* what, const RValue& r) {
    return t.add(Rule::CatalogFact, "extension", std::string("given ") + what + " = " + r.str());
  };
  if (ext.r_quotient && ext.r_quotient->is_infinite()) {
    const int p = premise("R(phibar)", *ext.r_quotient);
    t.add(Rule::LemRFacts1, "phi", "R(phi) = infinity", {p});
    return conclude(Conclusion::RInfinity, std::move(t));
  }
  if (ext.fix_quotient_finite.value_or(false) && ext.r_kernel && ext.r_kernel->is_infinite()) {
    const int p1 = t.add(Rule::CatalogFact, "extension", "given Fix(phibar) finite");
    const int p2 = premise("R(phi')", *ext.r_kernel);
    t.add(Rule::LemRFacts2, "phi", "R(phi) = infinity", {p1, p2});
    return conclude(Conclusion::RInfinity, std::move(t));
  }
  if (ext.central && ext.r_kernel && ext.r_quotient && !ext.r_kernel->is_infinite()) {
    const BigInt bound = *ext.r_kernel->finite * *ext.r_quotient->finite;
    if (!ext.uniform_fibers)
      return unknown("LemRFacts3: central extension without uniform fibers; only R(phi) <= " +
                     bound.str() + " is known");
    const int p1 = premise("R(phi')", *ext.r_kernel);
    const int p2 = premise("R(phibar)", *ext.r_quotient);
    t.add(Rule::LemRFacts3, "phi", "R(phi) = " + bound.str(), {p1, p2});
    Verdict v = conclude(Conclusion::ReidemeisterValue, std::move(t));
    v.value = RValue::of(bound);
    return v;
  }
  return unknown("extension premises are insufficient for any extension rule");
}

std::optional<std::string> verify_trace(const Verdict& v) {
  if (v.conclusion == Conclusion::Unknown) return std::nullopt;
  if (v.trace.empty()) return "non-Unknown verdict with an empty trace";

  const std::set<Rule> omega_src{Rule::CatalogFact, Rule::ThmProductFormula, Rule::ThmOmegaFromSigma};
  const std::set<Rule> sigma_src{Rule::CatalogFact, Rule::ThmProductFormula, Rule::FreeProductSigma};
  const std::set<Rule> rinf_src{Rule::CatalogFact,  Rule::ThmMain1,     Rule::ThmGK2,
                                Rule::ThmSec5Prod1, Rule::ThmFreeProd1, Rule::ThmFreeProd2,
                                Rule::ThmFreeProd3, Rule::LemRFacts1,   Rule::LemRFacts2};

  for (std::size_t i = 0; i < v.trace.size(); ++i) {
    const TraceStep& s = v.trace[i];
    const std::string at = "step " + std::to_string(i) + " (" + to_string(s.rule) + ")";
    if (s.id != static_cast<int>(i)) return at + ": id out of sequence";
    if (s.claim.empty()) return at + ": empty claim";
    for (int p : s.premises)
      if (p < 0 || p >= s.id) return at + ": premise " + std::to_string(p) + " is not an earlier step";

    auto premise_rules = [&] {
      std::vector<Rule> out;
      for (int p : s.premises) out.push_back(v.trace[p].rule);
      return out;
    };
    auto all_in = [&](const std::set<Rule>& allowed) {
      auto rs = premise_rules();
      return std::all_of(rs.begin(), rs.end(), [&](Rule r) { return allowed.count(r) > 0; });
    };
    auto any_in = [&](const std::set<Rule>& allowed) {
      auto rs = premise_rules();
      return std::any_of(rs.begin(), rs.end(), [&](Rule r) { return allowed.count(r) > 0; });
    };
    std::size_t need = 0;
    bool ok = true;
    switch (s.rule) {
      case Rule::CatalogFact:
      case Rule::FreeProductSigma: break;
      case Rule::ThmOmegaFromSigma: need = 1; ok = all_in(sigma_src); break;
      case Rule::ThmProductFormula: need = 1; ok = all_in(omega_src) || all_in(sigma_src); break;
      case Rule::ThmMain1:
      case Rule::ThmMain2:
      case Rule::ThmFreeProd2: need = 1; ok = all_in(omega_src); break;
      case Rule::ThmSec5Prod1:
      case Rule::ThmSec5Prod2: need = 2; ok = all_in(omega_src); break;
      case Rule::ThmGK1: need = 1; ok = all_in(sigma_src); break;
      case Rule::ThmGK2: need = 1; ok = any_in(sigma_src); break;
      case Rule::ThmFreeProd1: need = 1; ok = all_in({Rule::CatalogFact}); break;
      case Rule::ThmFreeProd3: need = 2; ok = any_in(rinf_src); break;
      case Rule::LemRFacts1: need = 1; ok = any_in(rinf_src); break;
      case Rule::LemRFacts2:
      case Rule::LemRFacts3: need = 2; break;
    }
    if (s.premises.size() < need) return at + ": needs at least " + std::to_string(need) + " premises";
    if (!ok) return at + ": premise of the wrong kind";
  }

  const Rule last = v.trace.back().rule;
  bool match = false;
  switch (v.conclusion) {
    case Conclusion::RInfinity: match = rinf_src.count(last) > 0; break;
    case Conclusion::IndexTwoSubgroupAllRInf:
      match = last == Rule::ThmMain2 || last == Rule::ThmSec5Prod2;
      break;
    case Conclusion::FiniteIndexSubgroupAllRInf: match = last == Rule::ThmGK1; break;
    case Conclusion::ReidemeisterValue: match = last == Rule::LemRFacts3 && v.value; break;
    case Conclusion::Unknown: match = true; break;
  }
  if (!match)
    return std::string("final rule ") + to_string(last) + " does not justify " + to_string(v.conclusion);
  return std::nullopt;
}

}  // namespace bnsr
