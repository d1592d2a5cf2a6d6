#include "ksa/json_io.hpp"

#include "ksa/errors.hpp"

namespace ksa {

Json to_json(const LatticeVertex& v) { return Json(v.coords); }

Json to_json(const PrimitiveSimplex& s) {
  Json doc;
  doc["base"] = s.base.coords;
  doc["perm"] = s.perm;
  return doc;
}

std::string outputs_string(const std::vector<Value>& outputs) { return InputConfig(outputs).to_string(); }

Json to_json(const OutcomeReport& r) {
  Json doc;
  doc["outputs"] = outputs_string(r.outputs);
  doc["valid"] = r.valid;
  doc["agreeing"] = r.agreeing;
  doc["distinct_count"] = r.distinct_count;
  return doc;
}

Json to_json(const Witness& w) {
  Json doc;
  doc["kind"] = to_string(w.kind);
  doc["config"] = w.config.to_string();
  doc["budget"] = w.budget;
  doc["nodes"] = w.nodes;
  doc["outputs"] = w.outputs;
  doc["simplex"] = w.simplex ? to_json(*w.simplex) : Json(nullptr);
  doc["verified"] = w.verified;
  return doc;
}

Witness witness_from_json(const Json& doc) {
  try {
    Witness w;
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "agreement_violation") {
      w.kind = ViolationKind::Agreement;
    } else if (kind == "validity_violation") {
      w.kind = ViolationKind::Validity;
    } else {
      throw InvalidArgument("unknown witness kind '" + kind + "'");
    }
    w.config = InputConfig::parse(doc.at("config").get<std::string>(), 9);
    w.budget = doc.at("budget").get<int>();
    w.nodes = doc.at("nodes").get<std::vector<Node>>();
    w.outputs = doc.at("outputs").get<std::vector<Value>>();
    if (const auto& s = doc.at("simplex"); !s.is_null()) {
      w.simplex = PrimitiveSimplex{LatticeVertex{s.at("base").get<std::vector<int>>()}, s.at("perm").get<std::vector<int>>()};
    }
    w.verified = doc.at("verified").get<bool>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed witness: ") + e.what());
  }
}

}  // namespace ksa
