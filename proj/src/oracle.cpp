#include "ksa/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ksa/errors.hpp"

namespace ksa::oracle {

namespace {

bool within_cap_power(int base, int exponent, std::uint64_t cap, std::uint64_t& out) {
  out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= static_cast<std::uint64_t>(base);
    if (out > cap) return false;
  }
  return true;
}

bool is_failure(const OutcomeReport& r) { return !r.valid || !r.agreeing; }

}  // namespace

ExhaustiveReport exhaustive_check(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                                  std::uint64_t cap) {
  std::uint64_t total = 0;
  if (!within_cap_power(k + 1, spec.n(), cap, total)) {
    throw CapExceeded("(k+1)^n = " + std::to_string(k + 1) + "^" + std::to_string(spec.n()) +
                      " configurations exceed the cap of " + std::to_string(cap));
  }
  ExhaustiveReport report;
  report.total_configs = total;
  // Odometer over digit strings, node 1 most significant.
  std::vector<Value> digits(static_cast<std::size_t>(spec.n()), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    const InputConfig config(digits);
    OutcomeReport outcome = run(spec, k, alg, config, budget);
    if (is_failure(outcome)) report.failures.emplace_back(config, std::move(outcome));
    for (int pos = spec.n() - 1; pos >= 0; --pos) {
      auto& d = digits[static_cast<std::size_t>(pos)];
      if (d < k) {
        ++d;
        break;
      }
      d = 0;
    }
  }
  return report;
}

ExhaustiveReport sampled_check(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                               int samples, std::uint64_t seed) {
  ExhaustiveReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> digit(0, k);
  for (int s = 0; s < samples; ++s) {
    std::vector<Value> values(static_cast<std::size_t>(spec.n()));
    for (auto& v : values) v = digit(rng);
    const InputConfig config(std::move(values));
    OutcomeReport outcome = run(spec, k, alg, config, budget);
    ++report.total_configs;
    if (is_failure(outcome)) report.failures.emplace_back(config, std::move(outcome));
  }
  return report;
}

std::vector<Node> brute_min_dominating_set(const Digraph& h) {
  const int n = h.n();
  if (n > 20) throw CapExceeded("brute-force domination is limited to n <= 20");
  for (int size = 0; size <= n; ++size) {
    // Selector vectors with the leading ones first walk the size-subsets in
    // lexicographic order under prev_permutation.
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      bool dominates = true;
      for (Node v = 1; v <= n && dominates; ++v) {
        bool hit = false;
        for (Node u = 1; u <= n && !hit; ++u) {
          hit = pick[static_cast<std::size_t>(u - 1)] && (u == v || h.has_arc(u, v));
        }
        dominates = hit;
      }
      if (dominates) {
        std::vector<Node> members;
        for (Node u = 1; u <= n; ++u) {
          if (pick[static_cast<std::size_t>(u - 1)]) members.push_back(u);
        }
        return members;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw CapExceeded("unreachable: the full node set always dominates");
}

int brute_domination(const Digraph& h) { return static_cast<int>(brute_min_dominating_set(h).size()); }

Digraph brute_closure(const DynamicGraphSpec& spec, int r) {
  const int n = spec.n();
  Digraph out(n);
  std::vector<Digraph> rounds;
  for (int t = 1; t <= r; ++t) rounds.push_back(graph_at(spec, t));
  // Depth-first over all walks of length r.
  std::vector<Node> walk;
  auto extend = [&](auto&& self, Node at, int t) -> void {
    if (t == r) {
      out.add_arc(walk.front(), at);
      return;
    }
    for (Node next = 1; next <= n; ++next) {
      if (next == at || rounds[static_cast<std::size_t>(t)].has_arc(at, next)) {
        walk.push_back(next);
        self(self, next, t + 1);
        walk.pop_back();
      }
    }
  };
  for (Node u = 1; u <= n; ++u) {
    walk = {u};
    extend(extend, u, 0);
  }
  return out;
}

std::vector<PrimitiveSimplex> brute_panchromatic(int n, int k, const Coloring& coloring, std::uint64_t cap) {
  std::uint64_t cells = 0;
  if (!within_cap_power(n, k, cap, cells)) throw CapExceeded("n^k exceeds the panchromatic brute-force cap");

  auto inside = [n](const std::vector<int>& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int upper = i == 0 ? n : x[i - 1];
      if (x[i] < 0 || x[i] > upper) return false;
    }
    return true;
  };

  std::vector<PrimitiveSimplex> found;
  std::vector<int> base(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<int> y = base;
      bool ok = inside(y);
      std::set<Value> colors;
      if (ok) colors.insert(coloring(LatticeVertex{y}));
      for (std::size_t i = 0; i < perm.size() && ok; ++i) {
        ++y[static_cast<std::size_t>(perm[i] - 1)];
        ok = inside(y);
        if (ok) colors.insert(coloring(LatticeVertex{y}));
      }
      if (ok && static_cast<int>(colors.size()) == k + 1 && *colors.begin() == 0 && *colors.rbegin() == k) {
        found.push_back(PrimitiveSimplex{LatticeVertex{base}, perm});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Next point of the box [0,n]^k in lexicographic order.
    int pos = k - 1;
    while (pos >= 0 && base[static_cast<std::size_t>(pos)] == n) base[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++base[static_cast<std::size_t>(pos)];
  }
  return found;
}

}  // namespace ksa::oracle
