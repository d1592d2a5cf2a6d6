#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ksa {

// Nodes are labeled 1..n throughout the library.
using Node = int;
using Arc = std::pair<Node, Node>;
using ArcList = std::vector<Arc>;

enum class Extension { RepeatLast, Cycle };

// Finite description of an infinite graph sequence G_1, G_2, ... on [n].
// Rounds past the stored list are generated by the extension rule.
class DynamicGraphSpec {
 public:
  // Throws InvalidArgument on n < 2, empty rounds, out-of-range endpoints or
  // self-loops. Arc lists are normalized (sorted, deduplicated).
  DynamicGraphSpec(int n, std::vector<ArcList> rounds,
                   Extension extension = Extension::RepeatLast);

  int n() const { return n_; }
  const std::vector<ArcList>& rounds() const { return rounds_; }
  Extension extension() const { return extension_; }

  // The same graph in every round.
  static DynamicGraphSpec constant(int n, ArcList arcs);

  bool operator==(const DynamicGraphSpec&) const = default;

 private:
  int n_;
  std::vector<ArcList> rounds_;
  Extension extension_;
};

// Arc set over [n], stored as an adjacency matrix.
class Digraph {
 public:
  explicit Digraph(int n);
  Digraph(int n, const ArcList& arcs);

  int n() const { return n_; }
  bool has_arc(Node u, Node v) const { return adj_[index(u, v)] != 0; }
  void add_arc(Node u, Node v);

  // Sorted lexicographically.
  ArcList arcs() const;
  std::size_t arc_count() const;
  std::vector<Node> out_neighbors(Node u) const;
  std::vector<Node> in_neighbors(Node v) const;

  static Digraph complete(int n);
  static Digraph identity(int n);

  bool operator==(const Digraph&) const = default;

 private:
  std::size_t index(Node u, Node v) const;

  int n_;
  std::vector<std::uint8_t> adj_;
};

// A set of nodes dominating a closure: every node is a member or has an
// in-arc from a member.
struct DominatingSetResult {
  int size = 0;
  std::vector<Node> members;  // ascending
  bool exact = false;
};

struct DominationOptions {
  int exact_cap = 32;
};

Digraph graph_at(const DynamicGraphSpec& spec, int t);

// H_r: arc (u,v) iff information starting at u can be at v after r rounds,
// where each round either stays or follows an arc of G_t. H_0 is the identity.
Digraph closure(const DynamicGraphSpec& spec, int r);

// All closures H_0..H_max_r, computed incrementally.
std::vector<Digraph> closures_up_to(const DynamicGraphSpec& spec, int max_r);

bool is_dominating(const Digraph& h, const std::vector<Node>& members);

// Exact minimum dominating set by branch and bound. Among minimum sets the
// lexicographically smallest member list is returned. Throws CapExceeded when
// n exceeds options.exact_cap.
DominatingSetResult min_dominating_set(const Digraph& h,
                                       const DominationOptions& options = {});

// Greedy max-coverage; ties go to the smallest node id.
DominatingSetResult greedy_dominating_set(const Digraph& h);

// Smallest r in [1, max_rounds] with gamma(H_r) <= k. Throws
// NotDominatedWithinCap if there is none.
int min_rounds(const DynamicGraphSpec& spec, int k, int max_rounds,
               const DominationOptions& options = {});

// Graph file: {"n": int, "rounds": [[[u,v],...],...], "extension": "repeat_last"|"cycle"}
DynamicGraphSpec parse_graph_json(const std::string& text);
DynamicGraphSpec load_graph_file(const std::string& path);
std::string to_graph_json(const DynamicGraphSpec& spec);

// One `u -> v;` line per arc.
std::string to_dot(const Digraph& g, const std::string& name = "H");

}  // namespace ksa
