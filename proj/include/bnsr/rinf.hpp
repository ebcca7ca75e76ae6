#pragma once

#include "bnsr/catalog.hpp"
#include "bnsr/group.hpp"
#include "bnsr/reidemeister.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bnsr {

enum class Conclusion {
  RInfinity,
  IndexTwoSubgroupAllRInf,
  FiniteIndexSubgroupAllRInf,
  ReidemeisterValue,
  Unknown
};

enum class Rule {
  CatalogFact,
  ThmOmegaFromSigma,
  ThmProductFormula,
  FreeProductSigma,
  ThmMain1,
  ThmMain2,
  ThmGK1,
  ThmGK2,
  ThmFreeProd1,
  ThmFreeProd2,
  ThmFreeProd3,
  ThmSec5Prod1,
  ThmSec5Prod2,
  LemRFacts1,
  LemRFacts2,
  LemRFacts3
};

const char* to_string(Conclusion c);
const char* to_string(Rule r);
/// One-line statement of the rule.
const char* rule_statement(Rule r);

struct TraceStep {
  int id = 0;
  Rule rule = Rule::CatalogFact;
  std::string subject;  // group or object the step is about
  std::string claim;
  std::vector<int> premises;  // ids of earlier steps
};

struct Verdict {
  Conclusion conclusion = Conclusion::Unknown;
  std::optional<RValue> value;  // ReidemeisterValue only
  std::vector<TraceStep> trace;
  std::vector<std::string> notes;

  /// RInfinity 3, IndexTwo / FiniteIndex 2, value 1, Unknown 0.
  int strength() const;
  /// Rule of the final step, if any.
  std::optional<Rule> final_rule() const;
};

struct DecideOptions {
  int max_level = kDefaultLevels;
  bool use_catalog_rinf = true;
};

Verdict decide_main(const GroupExpr& g, int n);
Verdict decide_gk(const GroupExpr& g);
Verdict decide_product(const GroupExpr& g, int n, const DecideOptions& opt = {});
Verdict decide_free_product(const GroupExpr& g, const DecideOptions& opt = {});
/// Direct product with finite factors: quotient by the torsion subgroup.
Verdict decide_torsion_quotient(const GroupExpr& g, const DecideOptions& opt = {});
Verdict decide_catalog(const GroupExpr& g);

/// Tries every rule and keeps the strongest verdict; ties go to the earlier rule.
Verdict decide(const GroupExpr& g, const DecideOptions& opt = {});

/// Premises for the extension rules on 1 -> N -> G -> Q -> 1 with phi
/// inducing phi' on N and phibar on Q.
struct ExtensionSpec {
  std::optional<RValue> r_kernel;    // R(phi')
  std::optional<RValue> r_quotient;  // R(phibar)
  std::optional<bool> fix_quotient_finite;
  bool central = false;
  /// Every phibar-class lifts to exactly R(phi') phi-classes (e.g. a product
  /// extension with product automorphism). Required for the value rule.
  bool uniform_fibers = false;
};

Verdict propagate_extension(const ExtensionSpec& ext);

/// Replays a trace: ids sequential, premises earlier, premise kinds match
/// each rule, final rule matches the conclusion. Returns the first problem.
std::optional<std::string> verify_trace(const Verdict& v);

}  // namespace bnsr
