#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksa/dyngraph.hpp"
#include "ksa/kuhn.hpp"
#include "ksa/protocol.hpp"

namespace ksa {

enum class ViolationKind { Agreement, Validity };

std::string to_string(ViolationKind kind);

// A concrete run of the candidate algorithm violating k-set agreement.
//  Agreement: nodes[i] decides outputs[i] on config, with k+1 distinct outputs.
//  Validity: nodes[0] decides outputs[0], a value absent from config.
struct Witness {
  ViolationKind kind = ViolationKind::Agreement;
  InputConfig config;
  int budget = 0;
  std::optional<PrimitiveSimplex> simplex;
  std::vector<Node> nodes;
  std::vector<Value> outputs;
  bool verified = false;
};

struct RefuteOptions {
  int threads = 1;
};

// Builds the algorithm's coloring of the triangulation, reports a validity
// violation if the coloring is not Sperner, otherwise extracts k+1 nodes
// deciding distinct values on inp(y_0) of the first panchromatic simplex.
// Throws BudgetNotBelowBound when gamma(H_budget) <= k, and LemmaFalsified if
// re-simulation does not reproduce k+1 distinct outputs.
Witness refute(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
               const RefuteOptions& options = {});

// Witness for a given primitive simplex: config = inp(y_0), nodes = node(y_i),
// outputs = decisions on config. Verified before returning.
Witness witness_from_simplex(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                             const PrimitiveSimplex& simplex);

// Replays the witness from scratch through the protocol layer only.
bool verify_witness(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, const Witness& witness);

struct CertifyOptions {
  std::uint64_t exhaustive_cap = 1'000'000;
  int samples = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct OutcomeSummary {
  bool passed = false;
  bool exhaustive = false;
  std::uint64_t total_configs = 0;
  std::uint64_t failures = 0;
  std::optional<InputConfig> first_failure;
  std::optional<Witness> witness;
};

// Above the bound: validity/agreement over every configuration (or a seeded
// sample when (k+1)^n exceeds the cap). Below it: delegates to refute.
OutcomeSummary certify(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                       const CertifyOptions& options = {});

}  // namespace ksa
