#include "bnsr/json_io.hpp"

#include <climits>
#include <sstream>

namespace bnsr {

Json to_json(const Direction& d) { return d.to_vector(); }

namespace {

Json points_json(const std::vector<Direction>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

std::vector<Direction> points_from(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("expected an array of integer vectors");
  std::vector<Direction> out;
  for (const auto& v : j) {
    if (!v.is_array() || v.empty()) throw JsonFormatError("expected a non-empty integer vector");
    std::vector<std::int64_t> c;
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw JsonFormatError("direction entries must be integers");
      c.push_back(x.get<std::int64_t>());
    }
    out.emplace_back(c);
  }
  return out;
}

Json part_json(const Part& p) {
  switch (p.kind) {
    case Part::Kind::Empty: return "empty";
    case Part::Kind::Full: return "full";
    case Part::Kind::Points: return Json{{"points", points_json(p.points)}};
    case Part::Kind::Cofinite: return Json{{"cofinite", points_json(p.points)}};
    case Part::Kind::Cone: return Json{{"cone", points_json(p.points)}};
  }
  return nullptr;
}

Part part_from(const Json& j) {
  if (j.is_string()) {
    if (j == "empty") return Part::empty();
    if (j == "full") return Part::full();
    throw JsonFormatError("unknown part '" + j.get<std::string>() + "'");
  }
  if (!j.is_object() || j.size() != 1) throw JsonFormatError("a part is a string or a one-key object");
  const auto& [key, val] = *j.items().begin();
  if (key == "points") return Part::finite(points_from(val));
  if (key == "cofinite") return Part::cofinite(points_from(val));
  if (key == "cone") return Part::cone(points_from(val));
  throw JsonFormatError("unknown part kind '" + key + "'");
}

BigInt integer_from(const Json& x) {
  if (x.is_number_integer()) return BigInt(x.get<std::int64_t>());
  if (x.is_string()) {
    try {
      return BigInt(x.get<std::string>());
    } catch (const std::exception&) {
      throw JsonFormatError("'" + x.get<std::string>() + "' is not an integer");
    }
  }
  throw JsonFormatError("expected an integer, got " + x.dump());
}

}  // namespace

Json to_json(const SphereSet& s) {
  Json atoms = Json::array();
  for (const auto& atom : s.atoms()) {
    Json parts = Json::array();
    for (const auto& p : atom) parts.push_back(part_json(p));
    atoms.push_back(parts);
  }
  return {{"ambient", s.ambient().ranks}, {"atoms", atoms}};
}

SphereSet sphere_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("atoms"))
    throw JsonFormatError("SphereSet needs 'ambient' and 'atoms'");
  std::vector<int> ranks;
  for (const auto& r : j.at("ambient")) {
    if (!r.is_number_integer() || r.get<int>() < 0) throw JsonFormatError("ranks must be naturals");
    ranks.push_back(r.get<int>());
  }
  std::vector<JoinAtom> atoms;
  for (const auto& a : j.at("atoms")) {
    if (!a.is_array()) throw JsonFormatError("an atom is an array of parts");
    JoinAtom atom;
    for (const auto& p : a) atom.push_back(part_from(p));
    atoms.push_back(std::move(atom));
  }
  return SphereSet(Decomposition(std::move(ranks)), std::move(atoms));
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const RValue& r) { return r.finite ? to_json(*r.finite) : Json("inf"); }

Json to_json(const Verdict& v) {
  Json trace = Json::array();
  for (const auto& s : v.trace)
    trace.push_back({{"id", s.id},
                     {"rule", to_string(s.rule)},
                     {"subject", s.subject},
                     {"claim", s.claim},
                     {"quote", rule_statement(s.rule)},
                     {"premises", s.premises}});
  Json j{{"conclusion", to_string(v.conclusion)}};
  if (v.value) j["value"] = to_json(*v.value);
  j["trace"] = trace;
  j["notes"] = v.notes;
  return j;
}

Json invariants_json(const GroupExpr& g, int max_level) {
  const KnownInvariants inv = lookup_invariants(g, max_level);
  Json j{{"group", g.str()}, {"hom_rank", inv.hom_rank}};
  j["finiteness_type"] =
      inv.finiteness_type == INT_MAX ? Json("infinity") : Json(inv.finiteness_type);
  if (inv.sigma1_complement)
    j["sigma1_complement"] = {{"set", to_json(*inv.sigma1_complement)},
                              {"text", describe(*inv.sigma1_complement)},
                              {"provenance", inv.sigma1_provenance}};
  else
    j["sigma1_complement"] = {{"set", nullptr}, {"provenance", inv.sigma1_provenance}};

  Json omega = Json::object();
  for (const auto& [n, lf] : inv.omega) {
    Json e;
    if (lf.set) {
      const Cardinality c = cardinality(*lf.set);
      e["set"] = to_json(*lf.set);
      e["text"] = describe(*lf.set);
      e["cardinality"] = c.kind == Cardinality::Kind::Finite ? Json(c.count()) : Json(to_string(c.kind));
      if (c.kind == Cardinality::Kind::Finite && c.count() == 2)
        e["antipodal"] = is_antipodal_pair(*lf.set);
    } else {
      e["set"] = nullptr;
      e["cardinality"] = lf.infinite ? "Infinite" : "Unknown";
    }
    e["o_class"] = to_string(lf.o_class());
    e["provenance"] = lf.provenance;
    omega[std::to_string(n)] = e;
  }
  j["omega"] = omega;
  j["rinf_citation"] = inv.rinf_citation ? Json(*inv.rinf_citation) : Json(nullptr);
  return j;
}

Json to_json(const ProbeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"s", to_string(row.s)},
                    {"|V|", row.vertices},
                    {"components", row.components},
                    {"lambda", row.lambda ? Json(to_string(*row.lambda)) : Json(nullptr)},
                    {"shell_touched", row.shell_touched},
                    {"reliable", row.reliable}});
  return {{"direction", to_json(r.gamma)},
          {"mode", to_string(r.mode)},
          {"radius", r.radius},
          {"rows", rows},
          {"evidence", to_string(r.evidence)},
          {"notes", r.notes}};
}

std::string probe_csv(const ProbeReport& r) {
  std::ostringstream out;
  out << "s,vertices,components,lambda,shell_touched,reliable\n";
  for (const auto& row : r.rows)
    out << to_string(row.s) << ',' << row.vertices << ',' << row.components << ','
        << (row.lambda ? to_string(*row.lambda) : "") << ',' << row.shell_touched << ','
        << row.reliable << '\n';
  return out.str();
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("matrix must be an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      throw JsonFormatError("matrix rows must be arrays of equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = integer_from(j[i][c]);
  }
  return m;
}

std::vector<BigInt> integers_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("expected an array of integers");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(integer_from(x));
  return out;
}

std::vector<std::vector<int>> table_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("table must be an array of rows");
  std::vector<std::vector<int>> t;
  for (const auto& row : j) {
    if (!row.is_array()) throw JsonFormatError("table rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw JsonFormatError("table entries must be integers");
      r.push_back(x.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

}  // namespace bnsr
