// bnsr: command-line front end. Every report is JSON on stdout with the
// library version; usage errors exit 2, computation errors exit 1 with an
// {"error": ...} object.
#include "bnsr/json_io.hpp"
#include "bnsr/version.hpp"
#include "checks.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace bnsr;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json report(const char* command) { return Json{{"version", kVersion}, {"command", command}}; }

Json parse_json_arg(const std::string& text, const std::string& flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(flag + ": not valid JSON (" + e.what() + ")");
  }
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    if (slash == std::string::npos) return Rational(num);
    const std::string den_text = text.substr(slash + 1);
    const std::int64_t den = std::stoll(den_text, &used);
    if (used != den_text.size() || den == 0) throw std::invalid_argument(text);
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw UsageError("'" + text + "' is not a rational number");
  }
}

// "[1,-1]" or "1,-1"
Direction parse_direction(const std::string& text) {
  const std::string body = !text.empty() && text.front() == '[' ? text : "[" + text + "]";
  const Json j = parse_json_arg(body, "--dir");
  std::vector<std::int64_t> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw UsageError("--dir entries must be integers");
    v.push_back(x.get<std::int64_t>());
  }
  if (v.empty()) throw UsageError("--dir must be non-empty");
  return Direction(v);
}

// Reads a JSON matrix and reports a bad shape as usage.
IntMatrix matrix_arg(const std::string& text, const std::string& flag) {
  try {
    return matrix_from_json(parse_json_arg(text, flag));
  } catch (const JsonFormatError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Json run_reidemeister(const std::string& matrix, const std::string& torsion, const std::string& action,
                      const std::string& mixing, const std::string& table, const std::string& automorphism) {
  Json out = report("reidemeister");
  if (!table.empty()) {
    if (automorphism.empty()) throw UsageError("--table needs --automorphism");
    FiniteGroupTable g(table_from_json(parse_json_arg(table, "--table")));
    std::vector<int> phi;
    for (const auto& x : parse_json_arg(automorphism, "--automorphism")) phi.push_back(x.get<int>());
    g.check_automorphism(phi);
    const TwistedClasses tc = brute_force_twisted_classes(g, phi);
    out["mode"] = "finite";
    out["order"] = g.order();
    out["R"] = tc.count;
    out["representatives"] = tc.representatives;
    return out;
  }
  if (matrix.empty()) throw UsageError("reidemeister needs --matrix or --table");
  FGAbelianAutomorphism phi = FGAbelianAutomorphism::on_free(matrix_arg(matrix, "--matrix"));
  if (!torsion.empty()) {
    phi.torsion_factors = integers_from_json(parse_json_arg(torsion, "--torsion"));
    const auto t = phi.torsion_count();
    if (action.empty()) {
      phi.torsion_part.resize(t, t);
      phi.torsion_part.setIdentity();
    } else {
      phi.torsion_part = matrix_arg(action, "--torsion-action");
    }
    if (mixing.empty()) {
      phi.mixing.resize(t, phi.free_rank());
      phi.mixing.setZero();
    } else {
      phi.mixing = matrix_arg(mixing, "--mixing");
    }
  } else if (!action.empty() || !mixing.empty()) {
    throw UsageError("--torsion-action and --mixing need --torsion");
  }
  phi.validate();
  out["mode"] = "abelian";
  out["free_rank"] = phi.free_rank();
  out["torsion"] = Json::array();
  for (const auto& d : phi.torsion_factors) out["torsion"].push_back(to_json(d));
  out["R"] = to_json(reidemeister_number(phi));
  if (phi.torsion_factors.empty()) out["fixed_subgroup_trivial"] = fixed_subgroup_trivial(phi);
  return out;
}

Json results_json(const std::vector<checks::CheckResult>& rs, bool& all_pass) {
  Json a = Json::array();
  for (const auto& r : rs) {
    all_pass = all_pass && r.pass;
    a.push_back({{"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sigma/Omega invariants, R-infinity verdicts, Reidemeister numbers and Cayley-ball probes"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string group;
  int levels = kDefaultLevels;
  auto* inv = app.add_subcommand("invariants", "known Sigma^1 complement and Omega^n of a group");
  inv->add_option("-g,--group", group, "group expression, e.g. \"BS(1,2) x F(3)\"")->required();
  inv->add_option("-n,--levels", levels, "highest Omega level")->check(CLI::Range(1, 16));

  bool no_catalog_rinf = false;
  auto* rinf = app.add_subcommand("rinf", "R-infinity verdict with derivation trace");
  rinf->add_option("-g,--group", group, "group expression")->required();
  rinf->add_option("-n,--levels", levels, "highest Omega level consulted")->check(CLI::Range(1, 16));
  rinf->add_flag("--no-catalog-rinf", no_catalog_rinf, "ignore cited R-infinity facts");

  std::string matrix, torsion, action, mixing, table, automorphism;
  auto* rd = app.add_subcommand("reidemeister", "exact Reidemeister number");
  rd->add_option("--matrix", matrix, "free part as a JSON matrix, columns are images");
  rd->add_option("--torsion", torsion, "torsion invariant factors, JSON array");
  rd->add_option("--torsion-action", action, "action on the torsion generators (default identity)");
  rd->add_option("--mixing", mixing, "torsion components of the free generators' images (default zero)");
  rd->add_option("--table", table, "finite group Cayley table, JSON");
  rd->add_option("--automorphism", automorphism, "automorphism of the table as a permutation, JSON");

  std::string atom_text, dir_text, mode_text = "halfspace", lambda_max = "2", lambda_step = "1/2";
  std::vector<std::string> grid_text;
  int radius = 6;
  bool csv = false;
  auto* pr = app.add_subcommand("probe", "Cayley-ball connectivity probe along one direction");
  pr->add_option("--atom", atom_text, "BS(1,n), Z^k, F(n) or Klein")->required();
  pr->add_option("--dir", dir_text, "direction, e.g. [1,0]")->required();
  pr->add_option("--mode", mode_text, "halfspace or cone")->check(CLI::IsMember({"halfspace", "cone"}));
  pr->add_option("--radius", radius, "ball radius")->check(CLI::Range(2, kMaxBallRadius));
  pr->add_option("--grid", grid_text, "scales s, comma separated rationals")->delimiter(',');
  pr->add_option("--lambda-max", lambda_max, "largest retreat lambda");
  pr->add_option("--lambda-step", lambda_step, "lambda search step");
  pr->add_flag("--csv", csv, "print the rows as CSV instead of JSON");

  bool golden_only = false;
  auto* sc = app.add_subcommand("selfcheck", "golden examples and the acceptance criteria");
  sc->add_flag("--golden-only", golden_only, "skip the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const char* command = app.get_subcommands().front()->get_name().c_str();
  try {
    Json out;
    int code = 0;
    if (*inv) {
      out = report("invariants");
      out.update(invariants_json(parse_group_expr(group), levels));
    } else if (*rinf) {
      DecideOptions opt;
      opt.max_level = levels;
      opt.use_catalog_rinf = !no_catalog_rinf;
      const GroupExpr g = parse_group_expr(group);
      out = report("rinf");
      out["group"] = g.str();
      out.update(to_json(decide(g, opt)));
    } else if (*rd) {
      out = run_reidemeister(matrix, torsion, action, mixing, table, automorphism);
    } else if (*pr) {
      const GroupExpr g = parse_group_expr(atom_text);
      if (!g.is_atom()) throw UsageError("--atom must be a single atom");
      ProbeConfig cfg;
      cfg.radius = radius;
      cfg.mode = mode_text == "cone" ? ProbeMode::TruncatedCone : ProbeMode::HalfSpace;
      if (!grid_text.empty()) {
        cfg.grid.clear();
        for (const auto& s : grid_text) cfg.grid.push_back(parse_rational(s));
      }
      cfg.lambda_max = parse_rational(lambda_max);
      cfg.lambda_step = parse_rational(lambda_step);
      if (cfg.lambda_step <= 0 || cfg.lambda_max < 0) throw UsageError("lambda bounds must be positive");
      const Direction gamma = parse_direction(dir_text);
      const auto rows = probe_direction_scan(g.atom(), {gamma}, cfg);
      const ScanRow& row = rows.front();
      if (csv) {
        std::cout << probe_csv(row.report);
        return 0;
      }
      out = report("probe");
      out["atom"] = g.str();
      out.update(to_json(row.report));
      out["catalog_member"] = row.catalog_member ? Json(*row.catalog_member) : Json(nullptr);
      out["warn"] = row.warn;
    } else if (*sc) {
      bool all = true;
      out = report("selfcheck");
      out["golden"] = results_json(checks::run_golden(), all);
      if (!golden_only) out["acceptance"] = results_json(checks::run_acceptance(), all);
      out["pass"] = all;
      code = all ? 0 : 1;
    }
    std::cout << out.dump(2) << '\n';
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    Json err = report(command);
    err["error"] = {{"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["error"]["type"] = "ParseError";
      err["error"]["position"] = pe->position();
    } else if (dynamic_cast<const UnsupportedAtom*>(&e)) {
      err["error"]["type"] = "UnsupportedAtom";
    } else if (dynamic_cast<const InvalidAutomorphism*>(&e) || dynamic_cast<const InvalidGroupTable*>(&e)) {
      err["error"]["type"] = "InvalidAutomorphism";
    } else {
      err["error"]["type"] = "ComputationError";
    }
    std::cout << err.dump(2) << '\n';
    return 1;
  }
}
