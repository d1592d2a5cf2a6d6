#pragma once

// Shared fixtures: the graph family used across suites, the colored
// triangulation drawn for the 5-cycle, and seeded random generators.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ksa/dyngraph.hpp"
#include "ksa/kuhn.hpp"
#include "ksa/protocol.hpp"

namespace ksa::testing {

inline DynamicGraphSpec cycle(int n) {
  ArcList arcs;
  for (Node u = 1; u <= n; ++u) arcs.emplace_back(u, u % n + 1);
  return DynamicGraphSpec::constant(n, arcs);
}

inline DynamicGraphSpec complete(int n) {
  ArcList arcs;
  for (Node u = 1; u <= n; ++u) {
    for (Node v = 1; v <= n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  return DynamicGraphSpec::constant(n, arcs);
}

inline DynamicGraphSpec path(int n) {
  ArcList arcs;
  for (Node u = 1; u < n; ++u) arcs.emplace_back(u, u + 1);
  return DynamicGraphSpec::constant(n, arcs);
}

// Three graphs on 4 nodes repeated cyclically; gamma(H_r) = 2 for r = 1..3
// and drops to 1 only once the first graph comes around again.
inline DynamicGraphSpec cycling4() {
  return DynamicGraphSpec(4, {{{1, 2}, {3, 4}}, {{2, 3}}, {{4, 1}}}, Extension::Cycle);
}

struct FamilyMember {
  std::string name;
  DynamicGraphSpec spec;
  int k;
};

inline std::vector<FamilyMember> bundled_family() {
  std::vector<FamilyMember> out;
  for (int k : {1, 2}) out.push_back({"C5", cycle(5), k});
  for (int n : {3, 4, 5}) {
    for (int k : {1, 2}) out.push_back({"K" + std::to_string(n), complete(n), k});
  }
  for (int k : {1, 2}) out.push_back({"P4", path(4), k});
  out.push_back({"cycling4", cycling4(), 1});
  return out;
}

inline std::string label(const FamilyMember& m) { return m.name + " k=" + std::to_string(m.k); }

// Colored triangulation for 2-set agreement on the 5-cycle after one round:
// vertex (x1,x2) -> (assigned node, color). Colors 0/1/2 are green/red/blue.
struct DrawnCell {
  Node node;
  Value color;
};

inline std::map<LatticeVertex, DrawnCell> drawn_cells() {
  const std::vector<std::tuple<int, int, Node, Value>> rows = {
      {0, 0, 1, 0}, {1, 0, 3, 0}, {2, 0, 1, 1}, {3, 0, 2, 0}, {4, 0, 1, 1}, {5, 0, 2, 1},
      {1, 1, 3, 0}, {2, 1, 4, 0}, {3, 1, 5, 2}, {4, 1, 3, 0}, {5, 1, 4, 1},
      {2, 2, 4, 0}, {3, 2, 5, 2}, {4, 2, 1, 1}, {5, 2, 4, 1},
      {3, 3, 5, 2}, {4, 3, 1, 1}, {5, 3, 2, 2},
      {4, 4, 3, 2}, {5, 4, 2, 2},
      {5, 5, 2, 2},
  };
  std::map<LatticeVertex, DrawnCell> out;
  for (const auto& [x1, x2, node, c] : rows) out[LatticeVertex{{x1, x2}}] = {node, c};
  return out;
}

inline Coloring drawn_coloring() {
  auto cells = std::make_shared<std::map<LatticeVertex, DrawnCell>>(drawn_cells());
  return [cells](const LatticeVertex& v) { return cells->at(v).color; };
}

// The bold triangle: inputs 21100, 21110, 22110.
inline PrimitiveSimplex drawn_bold_triangle() { return {LatticeVertex{{3, 1}}, {1, 2}}; }

inline DynamicGraphSpec random_spec(std::mt19937_64& rng, int max_n = 8, int max_rounds = 3) {
  std::uniform_int_distribution<int> n_dist(2, max_n);
  std::uniform_int_distribution<int> m_dist(1, max_rounds);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = n_dist(rng);
  const int m = m_dist(rng);
  const double density = 0.1 + 0.4 * coin(rng);
  std::vector<ArcList> rounds;
  for (int t = 0; t < m; ++t) {
    ArcList arcs;
    for (Node u = 1; u <= n; ++u) {
      for (Node v = 1; v <= n; ++v) {
        if (u != v && coin(rng) < density) arcs.emplace_back(u, v);
      }
    }
    rounds.push_back(std::move(arcs));
  }
  return DynamicGraphSpec(n, std::move(rounds), coin(rng) < 0.5 ? Extension::RepeatLast : Extension::Cycle);
}

// Uniform choice within each vertex's carrier.
inline Coloring random_sperner_coloring(int n, int k, std::mt19937_64& rng) {
  auto colors = std::make_shared<std::map<LatticeVertex, Value>>();
  for (VertexStream it(n, k); it; ++it) {
    const auto support = carrier(*it, n).indices;
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    (*colors)[*it] = support[pick(rng)];
  }
  return [colors](const LatticeVertex& v) { return colors->at(v); };
}

inline std::vector<Value> digits(const std::string& s) { return InputConfig::parse(s, 9).values(); }

}  // namespace ksa::testing
