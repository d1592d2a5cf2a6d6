#pragma once

// Brute-force reference implementations. Nothing in the production pipeline
// calls into this header; it backs tests and the `check` command.

#include <cstdint>
#include <utility>
#include <vector>

#include "ksa/dyngraph.hpp"
#include "ksa/kuhn.hpp"
#include "ksa/protocol.hpp"

namespace ksa::oracle {

struct ExhaustiveReport {
  std::uint64_t total_configs = 0;
  std::vector<std::pair<InputConfig, OutcomeReport>> failures;
};

constexpr std::uint64_t kDefaultConfigCap = 1'000'000;

// Runs alg on all (k+1)^n configurations, in lexicographic order of the digit
// string. Throws CapExceeded above `cap` configurations.
ExhaustiveReport exhaustive_check(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                                  std::uint64_t cap = kDefaultConfigCap);

// Seeded uniform sample of configurations; total_configs = samples.
ExhaustiveReport sampled_check(const DynamicGraphSpec& spec, int k, const AlgorithmSpec& alg, int budget,
                               int samples, std::uint64_t seed);

// gamma(H) by enumerating subsets in increasing size. n <= 20.
int brute_domination(const Digraph& h);

// The first dominating set found when subsets are enumerated by size, then in
// lexicographic order of their sorted member lists. n <= 20.
std::vector<Node> brute_min_dominating_set(const Digraph& h);

// H_r straight from the walk definition: all sequences w_1..w_{r+1} where
// each step stays or follows an arc of G_t. Exponential; tiny inputs only.
Digraph brute_closure(const DynamicGraphSpec& spec, int r);

// Every primitive simplex inside the simplex whose colors are exactly {0..k},
// found by scanning the whole box [0,n]^k. Throws CapExceeded when n^k > cap.
std::vector<PrimitiveSimplex> brute_panchromatic(int n, int k, const Coloring& coloring,
                                                 std::uint64_t cap = kDefaultConfigCap);

}  // namespace ksa::oracle
