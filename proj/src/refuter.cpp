#include "ksa/refuter.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ksa/errors.hpp"

namespace ksa {

namespace {

void require_below_bound(const DynamicGraphSpec& spec, int k, int budget) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (budget < 0) throw InvalidArgument("budget must be non-negative");
  const auto gamma = min_dominating_set(closure(spec, budget)).size;
  if (gamma <= k) {
    throw BudgetNotBelowBound("budget " + std::to_string(budget) + " is not below the round bound: gamma(H_" +
                              std::to_string(budget) + ") = " + std::to_string(gamma) +
                              " <= k = " + std::to_string(k));
  }
}

// (k+1)^n, saturating at cap + 1.
std::uint64_t config_count(int n, int k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k) + 1;
    if (total > cap) return cap + 1;
  }
  return total;
}

InputConfig config_from_index(std::uint64_t index, int n, int k) {
  std::vector<Value> values(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    values[static_cast<std::size_t>(i)] = static_cast<Value>(index % static_cast<std::uint64_t>(k + 1));
    index /= static_cast<std::uint64_t>(k + 1);
  }
  return InputConfig(std::move(values));
}

}  // namespace

std::string to_string(ViolationKind kind) {
  return kind == ViolationKind::Agreement ? "agreement_violation" : "validity_violation";
}

bool verify_witness(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, const Witness& w) {
  if (w.nodes.size() != w.outputs.size() || w.nodes.empty()) return false;
  const OutcomeReport replay = run(spec, k, alg, w.config, w.budget);
  for (std::size_t i = 0; i < w.nodes.size(); ++i) {
    const Node node = w.nodes[i];
    if (node < 1 || node > spec.n()) return false;
    if (replay.outputs[static_cast<std::size_t>(node - 1)] != w.outputs[i]) return false;
  }
  if (w.kind == ViolationKind::Validity) {
    const auto& values = w.config.values();
    return std::find(values.begin(), values.end(), w.outputs[0]) == values.end();
  }
  const std::set<Value> distinct(w.outputs.begin(), w.outputs.end());
  return static_cast<int>(w.nodes.size()) == k + 1 && static_cast<int>(distinct.size()) == k + 1;
}

Witness witness_from_simplex(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                             const PrimitiveSimplex& simplex) {
  const Digraph h = closure(spec, budget);
  const auto ys = simplex.vertices();
  Witness w;
  w.kind = ViolationKind::Agreement;
  w.config = inp(ys.front(), spec.n());
  w.budget = budget;
  w.simplex = simplex;
  for (const auto& y : ys) {
    const Node node = assign_node(h, y);
    w.nodes.push_back(node);
    w.outputs.push_back(decide_checked(alg, spec, k, view_in(h, w.config, node, budget)));
  }
  w.verified = verify_witness(spec, k, alg, w);
  if (!w.verified) {
    throw LemmaFalsified("simplex at base " + inp(simplex.base, spec.n()).to_string() +
                         " did not re-simulate to " + std::to_string(k + 1) + " distinct outputs on " +
                         w.config.to_string());
  }
  return w;
}

Witness refute(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
               const RefuteOptions& options) {
  require_below_bound(spec, k, budget);
  const AlgorithmColoring coloring(spec, k, budget, alg);
  if (options.threads > 1) coloring.prefill(options.threads);

  // A color outside the carrier is a value no node holds in inp(v).
  const SpernerReport sperner = check_sperner(spec.n(), k, coloring.as_coloring());
  if (!sperner.is_sperner) {
    const auto& bad = sperner.violations.front();
    Witness w;
    w.kind = ViolationKind::Validity;
    w.config = inp(bad.vertex, spec.n());
    w.budget = budget;
    w.nodes = {coloring.node(bad.vertex)};
    w.outputs = {bad.color};
    w.verified = verify_witness(spec, k, alg, w);
    if (!w.verified) throw LemmaFalsified("validity violation at " + w.config.to_string() + " did not replay");
    return w;
  }

  return witness_from_simplex(spec, k, alg, budget, find_panchromatic(spec.n(), k, coloring.as_coloring()));
}

OutcomeSummary certify(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                       const CertifyOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (budget < 0) throw InvalidArgument("budget must be non-negative");
  OutcomeSummary summary;
  if (min_dominating_set(closure(spec, budget)).size > k) {
    summary.witness = refute(spec, k, alg, budget, {options.threads});
    summary.passed = false;
    summary.failures = 1;
    summary.first_failure = summary.witness->config;
    return summary;
  }

  const std::uint64_t total = config_count(spec.n(), k, options.exhaustive_cap);
  auto record = [&](const InputConfig& config) {
    ++summary.total_configs;
    const OutcomeReport report = run(spec, k, alg, config, budget);
    if (!report.valid || !report.agreeing) {
      ++summary.failures;
      if (!summary.first_failure) summary.first_failure = config;
    }
  };

  if (total <= options.exhaustive_cap) {
    summary.exhaustive = true;
    for (std::uint64_t i = 0; i < total; ++i) record(config_from_index(i, spec.n(), k));
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Value> digit(0, k);
    for (int s = 0; s < options.samples; ++s) {
      std::vector<Value> values(static_cast<std::size_t>(spec.n()));
      for (auto& v : values) v = digit(rng);
      record(InputConfig(std::move(values)));
    }
  }
  summary.passed = summary.failures == 0;
  return summary;
}

}  // namespace ksa
