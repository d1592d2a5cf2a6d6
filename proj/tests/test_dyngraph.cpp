#include <queue>

#include "doctest.h"
#include "ksa/dyngraph.hpp"
#include "ksa/errors.hpp"
#include "ksa/oracle.hpp"
#include "support.hpp"

using namespace ksa;
using ksa::testing::complete;
using ksa::testing::cycle;

namespace {

// Directed BFS distances from u in a single static graph.
std::vector<int> bfs_distances(const Digraph& g, Node u) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()) + 1, -1);
  std::queue<Node> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    const Node w = q.front();
    q.pop();
    for (Node v : g.out_neighbors(w)) {
      if (dist[v] < 0) {
        dist[v] = dist[w] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

bool subset(const Digraph& a, const Digraph& b) {
  for (const auto& [u, v] : a.arcs()) {
    if (!b.has_arc(u, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("spec construction rejects malformed sequences") {
  CHECK_THROWS_AS(DynamicGraphSpec(1, {{}}), InvalidArgument);
  CHECK_THROWS_AS(DynamicGraphSpec(3, {}), InvalidArgument);
  CHECK_THROWS_AS(DynamicGraphSpec(3, {{{1, 1}}}), InvalidArgument);
  CHECK_THROWS_AS(DynamicGraphSpec(3, {{{1, 4}}}), InvalidArgument);
  CHECK_THROWS_AS(DynamicGraphSpec(3, {{{0, 2}}}), InvalidArgument);
  const DynamicGraphSpec dup(3, {{{2, 3}, {1, 2}, {2, 3}}});
  CHECK(dup.rounds()[0] == ArcList{{1, 2}, {2, 3}});
}

TEST_CASE("graph_at realizes the extension rules") {
  const Digraph c5_arcs(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  CHECK(graph_at(cycle(5), 7) == c5_arcs);

  const ArcList a{{1, 2}};
  const ArcList b{{2, 1}};
  const DynamicGraphSpec cyc(2, {a, b}, Extension::Cycle);
  const DynamicGraphSpec rep(2, {a, b}, Extension::RepeatLast);
  CHECK(graph_at(cyc, 4) == Digraph(2, b));
  CHECK(graph_at(cyc, 3) == Digraph(2, a));
  CHECK(graph_at(rep, 1) == Digraph(2, a));
  CHECK(graph_at(rep, 9) == Digraph(2, b));
  CHECK_THROWS_AS(graph_at(rep, 0), InvalidArgument);
}

TEST_CASE("closure of the directed 5-cycle") {
  const auto c5 = cycle(5);
  SUBCASE("r = 0 is the identity") { CHECK(closure(c5, 0) == Digraph::identity(5)); }
  SUBCASE("r = 1 adds one hop") {
    Digraph expected = Digraph::identity(5);
    for (Node i = 1; i <= 5; ++i) expected.add_arc(i, i % 5 + 1);
    CHECK(closure(c5, 1) == expected);
  }
  SUBCASE("r = 2 is cyclic distance at most 2") {
    const Digraph h2 = closure(c5, 2);
    for (Node u = 1; u <= 5; ++u) {
      for (Node v = 1; v <= 5; ++v) {
        const int d = ((v - u) % 5 + 5) % 5;
        CHECK(h2.has_arc(u, v) == (d <= 2));
      }
    }
    CHECK(h2.arc_count() == 15);
  }
}

TEST_CASE("closure properties on seeded random specs") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    const auto spec = ksa::testing::random_spec(rng);
    const auto hs = closures_up_to(spec, 6);
    for (int r = 0; r <= 6; ++r) {
      for (Node u = 1; u <= spec.n(); ++u) CHECK(hs[r].has_arc(u, u));
      if (r < 6) CHECK(subset(hs[r], hs[r + 1]));
      CHECK(closure(spec, r) == hs[r]);
    }
    // gamma is non-increasing in r
    for (int r = 0; r < 6; ++r) {
      CHECK(min_dominating_set(hs[r + 1]).size <= min_dominating_set(hs[r]).size);
    }
    // literal walk enumeration agrees for short horizons
    for (int r = 0; r <= 3; ++r) CHECK(oracle::brute_closure(spec, r) == hs[r]);
  }
}

TEST_CASE("static sequences close to bounded BFS distance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto spec = ksa::testing::random_spec(rng, 8, 1);
    const Digraph g = graph_at(spec, 1);
    for (int r = 0; r <= 5; ++r) {
      const Digraph h = closure(spec, r);
      for (Node u = 1; u <= spec.n(); ++u) {
        const auto dist = bfs_distances(g, u);
        for (Node v = 1; v <= spec.n(); ++v) CHECK(h.has_arc(u, v) == (dist[v] >= 0 && dist[v] <= r));
      }
    }
  }
}

TEST_CASE("min_dominating_set examples") {
  const auto c5 = cycle(5);
  const auto h1 = min_dominating_set(closure(c5, 1));
  CHECK(h1.size == 3);
  // {1,3,5} is also optimal but {1,2,4} comes first lexicographically.
  CHECK(h1.members == std::vector<Node>{1, 2, 4});
  CHECK(is_dominating(closure(c5, 1), {1, 3, 5}));
  CHECK(h1.exact);

  // Several optima of size 2 exist; {1,3} is the lexicographically first.
  const auto h2 = min_dominating_set(closure(c5, 2));
  CHECK(h2.size == 2);
  CHECK(h2.members == std::vector<Node>{1, 3});
  CHECK(is_dominating(closure(c5, 2), {1, 4}));

  const auto full = min_dominating_set(Digraph::complete(6));
  CHECK(full.size == 1);
  CHECK(full.members == std::vector<Node>{1});

  CHECK(min_dominating_set(Digraph::identity(4)).members == std::vector<Node>{1, 2, 3, 4});
}

TEST_CASE("min_dominating_set cap") {
  CHECK_THROWS_AS(min_dominating_set(Digraph::identity(33)), CapExceeded);
  CHECK_THROWS_AS(min_dominating_set(Digraph::identity(6), {5}), CapExceeded);
  CHECK(min_dominating_set(Digraph::identity(32)).size == 32);
  CHECK(min_dominating_set(closure(cycle(32), 3)).size == 8);
}

TEST_CASE("greedy_dominating_set examples") {
  CHECK(greedy_dominating_set(Digraph::complete(5)).size == 1);
  const auto g = greedy_dominating_set(closure(cycle(5), 1));
  CHECK(g.size == 3);
  CHECK_FALSE(g.exact);
  CHECK(greedy_dominating_set(Digraph::identity(4)).size == 4);
}

TEST_CASE("exact domination matches brute force and bounds greedy") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto spec = ksa::testing::random_spec(rng, 9, 2);
    std::uniform_int_distribution<int> r_dist(0, 3);
    const Digraph h = closure(spec, r_dist(rng));
    const auto exact = min_dominating_set(h);
    const auto greedy = greedy_dominating_set(h);
    CHECK(exact.members == oracle::brute_min_dominating_set(h));
    CHECK(greedy.size >= exact.size);
    CHECK(is_dominating(h, exact.members));
    CHECK(is_dominating(h, greedy.members));
  }
}

TEST_CASE("exhaustive small digraphs") {
  // Every digraph on 3 nodes (with self-arcs): 2^6 arc patterns.
  for (int mask = 0; mask < 64; ++mask) {
    Digraph h = Digraph::identity(3);
    int bit = 0;
    for (Node u = 1; u <= 3; ++u) {
      for (Node v = 1; v <= 3; ++v) {
        if (u != v && (mask >> bit++) & 1) h.add_arc(u, v);
      }
    }
    CHECK(min_dominating_set(h).members == oracle::brute_min_dominating_set(h));
  }
}

TEST_CASE("min_rounds") {
  CHECK(min_rounds(cycle(5), 2, 64) == 2);
  CHECK(min_rounds(cycle(5), 1, 64) == 4);
  CHECK(min_rounds(complete(4), 1, 64) == 1);
  CHECK(min_rounds(complete(4), 3, 64) == 1);
  CHECK(min_rounds(ksa::testing::path(4), 1, 64) == 3);
  CHECK(min_rounds(ksa::testing::path(4), 2, 64) == 1);
  CHECK(min_rounds(ksa::testing::cycling4(), 1, 64) == 4);

  const DynamicGraphSpec empty(3, {{}});
  CHECK_THROWS_AS(min_rounds(empty, 2, 10), NotDominatedWithinCap);
  CHECK(min_rounds(empty, 3, 10) == 1);
  CHECK_THROWS_AS(min_rounds(cycle(5), 1, 3), NotDominatedWithinCap);
}

TEST_CASE("graph JSON round trip and errors") {
  const auto spec = ksa::testing::cycling4();
  CHECK(parse_graph_json(to_graph_json(spec)) == spec);
  const auto parsed = parse_graph_json(R"({"n": 3, "rounds": [[[1,2]], [[2,3]]]})");
  CHECK(parsed.extension() == Extension::RepeatLast);
  CHECK_THROWS_AS(parse_graph_json("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 3})"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 3, "rounds": [[[1,2,3]]]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 3, "rounds": [[[1,2]]], "extension": "bounce"})"), InvalidArgument);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.json"), InvalidArgument);
}

TEST_CASE("DOT export lists one line per arc") {
  const std::string dot = to_dot(Digraph(3, {{1, 2}, {2, 3}}), "G");
  CHECK(dot == "digraph G {\n  1 -> 2;\n  2 -> 3;\n}\n");
}
