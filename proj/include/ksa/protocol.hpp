#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksa/dyngraph.hpp"

namespace ksa {

using Value = int;

// One input value in {0..k} per node; node i is stored at position i-1.
class InputConfig {
 public:
  InputConfig() = default;
  explicit InputConfig(std::vector<Value> values) : values_(std::move(values)) {}

  // Digit string, node 1 first ("21100"). Rejects non-digits and digits > k.
  static InputConfig parse(const std::string& digits, int k);

  int size() const { return static_cast<int>(values_.size()); }
  Value at(Node i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Value>& values() const { return values_; }

  // Throws InvalidArgument unless size() == n and every entry is in {0..k}.
  void check(int n, int k) const;

  std::string to_string() const;

  auto operator<=>(const InputConfig&) const = default;

 private:
  std::vector<Value> values_;
};

// Everything a node knows after `budget` rounds in the KNOW-ALL model. The
// graph sequence is common knowledge, so the view reduces to the inputs of the
// in-neighbors of the observer in H_budget.
struct View {
  Node observer = 0;
  int budget = 0;
  std::map<Node, Value> heard;

  bool operator==(const View&) const = default;
};

// A deterministic candidate algorithm: a pure function of its arguments.
struct AlgorithmSpec {
  std::string name;
  std::function<Value(const DynamicGraphSpec&, int k, const View&)> decide;
};

struct OutcomeReport {
  std::vector<Value> outputs;
  bool valid = false;
  bool agreeing = false;
  int distinct_count = 0;
};

View view_of(const DynamicGraphSpec& spec, const InputConfig& inputs, Node observer, int budget);

// Same as view_of with H_budget precomputed.
View view_in(const Digraph& h_budget, const InputConfig& inputs, Node observer, int budget);

// Validity and agreement of a vector of outputs against the inputs.
OutcomeReport evaluate(const InputConfig& inputs, std::vector<Value> outputs, int k);

// Every node decides on its view after `budget` rounds. Throws
// AlgorithmRangeError if a decision falls outside {0..k}.
OutcomeReport run(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg,
                  const InputConfig& inputs, int budget);

// Decision of one node, range-checked.
Value decide_checked(const AlgorithmSpec& alg, const DynamicGraphSpec& spec, int k, const View& view);

constexpr int kDefaultMaxRounds = 64;

struct FloodSolution {
  int rounds = 0;
  std::vector<Node> dominators;
  OutcomeReport report;
};

// Flooding for r = min_rounds(spec, k) rounds; each node outputs the input of
// the smallest dominator it heard from.
FloodSolution flood_solve(const DynamicGraphSpec& spec, int k, const InputConfig& inputs,
                          int max_rounds = kDefaultMaxRounds);

// Outputs the input of the smallest member of the minimum dominating set of
// H_r that the node heard; its own input if none. Without an explicit r the
// algorithm uses min_rounds(spec, k).
AlgorithmSpec flood_dominator(std::optional<int> intended_rounds = std::nullopt,
                              int max_rounds = kDefaultMaxRounds);
AlgorithmSpec min_heard();
AlgorithmSpec max_heard();
// Most frequent heard value, ties to the smaller value.
AlgorithmSpec majority_heard();
// Always decides c. Violates validity whenever c is nobody's input.
AlgorithmSpec constant_value(Value c);

// The validity-respecting algorithms shipped with the library.
std::vector<AlgorithmSpec> builtin_algorithms();

// Accepts the builtin names plus "flood_dominator:<r>" and "constant:<c>".
AlgorithmSpec algorithm_by_name(const std::string& name);

}  // namespace ksa
