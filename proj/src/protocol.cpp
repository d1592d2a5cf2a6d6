#include "ksa/protocol.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "ksa/errors.hpp"

namespace ksa {

InputConfig InputConfig::parse(const std::string& digits, int k) {
  std::vector<Value> values;
  values.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("input string may only contain digits: '" + digits + "'");
    const Value v = c - '0';
    if (v > k) {
      throw InvalidArgument("input digit " + std::to_string(v) + " exceeds k = " + std::to_string(k));
    }
    values.push_back(v);
  }
  return InputConfig(std::move(values));
}

void InputConfig::check(int n, int k) const {
  if (size() != n) {
    throw InvalidArgument("input configuration has " + std::to_string(size()) + " entries, expected " +
                          std::to_string(n));
  }
  for (Value v : values_) {
    if (v < 0 || v > k) throw InvalidArgument("input value " + std::to_string(v) + " outside {0.." + std::to_string(k) + "}");
  }
}

std::string InputConfig::to_string() const {
  std::string out;
  out.reserve(values_.size());
  for (Value v : values_) {
    // Values above 9 never occur for parsed configs; keep them readable anyway.
    if (v >= 0 && v <= 9) {
      out.push_back(static_cast<char>('0' + v));
    } else {
      out += "(" + std::to_string(v) + ")";
    }
  }
  return out;
}

View view_in(const Digraph& h_budget, const InputConfig& inputs, Node observer, int budget) {
  if (observer < 1 || observer > h_budget.n()) throw InvalidArgument("observer out of range");
  View view{observer, budget, {}};
  for (Node j = 1; j <= h_budget.n(); ++j) {
    if (h_budget.has_arc(j, observer)) view.heard.emplace(j, inputs.at(j));
  }
  return view;
}

View view_of(const DynamicGraphSpec& spec, const InputConfig& inputs, Node observer, int budget) {
  if (budget < 0) throw InvalidArgument("budget must be non-negative");
  return view_in(closure(spec, budget), inputs, observer, budget);
}

OutcomeReport evaluate(const InputConfig& inputs, std::vector<Value> outputs, int k) {
  const std::set<Value> present(inputs.values().begin(), inputs.values().end());
  const std::set<Value> decided(outputs.begin(), outputs.end());
  OutcomeReport report;
  report.valid = std::all_of(outputs.begin(), outputs.end(), [&](Value y) { return present.contains(y); });
  report.distinct_count = static_cast<int>(decided.size());
  report.agreeing = report.distinct_count <= k;
  report.outputs = std::move(outputs);
  return report;
}

Value decide_checked(const AlgorithmSpec& alg, const DynamicGraphSpec& spec, int k, const View& view) {
  const Value y = alg.decide(spec, k, view);
  if (y < 0 || y > k) {
    throw AlgorithmRangeError(alg.name + " decided " + std::to_string(y) + " at node " +
                              std::to_string(view.observer) + ", outside {0.." + std::to_string(k) + "}");
  }
  return y;
}

OutcomeReport run(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, const InputConfig& inputs,
                  int budget) {
  if (budget < 0) throw InvalidArgument("budget must be non-negative");
  inputs.check(spec.n(), k);
  const Digraph h = closure(spec, budget);
  std::vector<Value> outputs;
  outputs.reserve(static_cast<std::size_t>(spec.n()));
  for (Node i = 1; i <= spec.n(); ++i) {
    outputs.push_back(decide_checked(alg, spec, k, view_in(h, inputs, i, budget)));
  }
  return evaluate(inputs, std::move(outputs), k);
}

namespace {

// Dominating sets are recomputed only when the (spec, k) pair changes.
class DominatorCache {
 public:
  DominatorCache(std::optional<int> rounds, int max_rounds) : rounds_(rounds), max_rounds_(max_rounds) {}

  std::vector<Node> get(const DynamicGraphSpec& spec, int k) {
    std::lock_guard lock(mutex_);
    if (!entry_ || entry_->spec != spec || entry_->k != k) {
      const int r = rounds_ ? *rounds_ : min_rounds(spec, k, max_rounds_);
      entry_ = Entry{spec, k, min_dominating_set(closure(spec, r)).members};
    }
    return entry_->dominators;
  }

 private:
  struct Entry {
    DynamicGraphSpec spec;
    int k;
    std::vector<Node> dominators;
  };

  std::optional<int> rounds_;
  int max_rounds_;
  std::mutex mutex_;
  std::optional<Entry> entry_;
};

}  // namespace

AlgorithmSpec flood_dominator(std::optional<int> intended_rounds, int max_rounds) {
  if (intended_rounds && *intended_rounds < 0) throw InvalidArgument("flood_dominator rounds must be non-negative");
  auto cache = std::make_shared<DominatorCache>(intended_rounds, max_rounds);
  std::string name = "flood_dominator";
  if (intended_rounds) name += ":" + std::to_string(*intended_rounds);
  return {name, [cache](const DynamicGraphSpec& spec, int k, const View& view) {
            for (Node d : cache->get(spec, k)) {
              if (auto it = view.heard.find(d); it != view.heard.end()) return it->second;
            }
            return view.heard.at(view.observer);
          }};
}

AlgorithmSpec min_heard() {
  return {"min_heard", [](const DynamicGraphSpec&, int, const View& view) {
            return std::min_element(view.heard.begin(), view.heard.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; })
                ->second;
          }};
}

AlgorithmSpec max_heard() {
  return {"max_heard", [](const DynamicGraphSpec&, int, const View& view) {
            return std::max_element(view.heard.begin(), view.heard.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; })
                ->second;
          }};
}

AlgorithmSpec majority_heard() {
  return {"majority_heard", [](const DynamicGraphSpec&, int, const View& view) {
            std::map<Value, int> counts;
            for (const auto& [node, value] : view.heard) ++counts[value];
            Value best = counts.begin()->first;
            int best_count = 0;
            for (const auto& [value, count] : counts) {
              if (count > best_count) {
                best = value;
                best_count = count;
              }
            }
            return best;
          }};
}

AlgorithmSpec constant_value(Value c) {
  return {"constant:" + std::to_string(c), [c](const DynamicGraphSpec&, int, const View&) { return c; }};
}

FloodSolution flood_solve(const DynamicGraphSpec& spec, int k, const InputConfig& inputs, int max_rounds) {
  inputs.check(spec.n(), k);
  FloodSolution out;
  out.rounds = min_rounds(spec, k, max_rounds);
  out.dominators = min_dominating_set(closure(spec, out.rounds)).members;
  out.report = run(spec, k, flood_dominator(out.rounds), inputs, out.rounds);
  return out;
}

std::vector<AlgorithmSpec> builtin_algorithms() {
  return {flood_dominator(), min_heard(), max_heard(), majority_heard()};
}

AlgorithmSpec algorithm_by_name(const std::string& name) {
  auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("bad numeric suffix in algorithm name '" + name + "'");
    }
    return std::stoi(rest);
  };
  if (name == "flood_dominator") return flood_dominator();
  if (name == "min_heard") return min_heard();
  if (name == "max_heard") return max_heard();
  if (name == "majority_heard") return majority_heard();
  if (auto r = suffix_int("flood_dominator:")) return flood_dominator(*r);
  if (auto c = suffix_int("constant:")) return constant_value(*c);
  throw InvalidArgument("unknown algorithm '" + name +
                        "' (expected flood_dominator[:r], min_heard, max_heard, majority_heard, constant:<c>)");
}

}  // namespace ksa
