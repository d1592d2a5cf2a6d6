#pragma once

#include "json.hpp"
#include "ksa/dyngraph.hpp"
#include "ksa/kuhn.hpp"
#include "ksa/protocol.hpp"
#include "ksa/refuter.hpp"

namespace ksa {

using Json = nlohmann::ordered_json;

Json to_json(const LatticeVertex& v);
Json to_json(const PrimitiveSimplex& s);
Json to_json(const OutcomeReport& r);

// {"kind", "config", "budget", "nodes", "outputs", "simplex": {"base", "perm"} | null, "verified"}
Json to_json(const Witness& w);
Witness witness_from_json(const Json& doc);

// Digits of an output vector, node 1 first.
std::string outputs_string(const std::vector<Value>& outputs);

}  // namespace ksa
