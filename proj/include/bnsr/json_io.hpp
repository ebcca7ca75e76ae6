#pragma once

#include "bnsr/catalog.hpp"
#include "bnsr/probe.hpp"
#include "bnsr/reidemeister.hpp"
#include "bnsr/rinf.hpp"
#include "bnsr/sphere.hpp"

#include <json.hpp>

namespace bnsr {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Direction& d);
/// {"ambient":[ranks],"atoms":[[part,...]]}; parts "empty" | "full" |
/// {"points":[[..]]} | {"cofinite":[[..]]} | {"cone":[[..]]}.
Json to_json(const SphereSet& s);
SphereSet sphere_from_json(const Json& j);

/// Integer when it fits in 64 bits, else a decimal string; "inf" for infinity.
Json to_json(const RValue& r);
Json to_json(const BigInt& v);
Json to_json(const Verdict& v);
Json invariants_json(const GroupExpr& g, int max_level);
Json to_json(const ProbeReport& r);
std::string probe_csv(const ProbeReport& r);

/// Rectangular array of integers (numbers or decimal strings).
IntMatrix matrix_from_json(const Json& j);
std::vector<BigInt> integers_from_json(const Json& j);
std::vector<std::vector<int>> table_from_json(const Json& j);

}  // namespace bnsr
