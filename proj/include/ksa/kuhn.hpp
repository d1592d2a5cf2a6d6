#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ksa/dyngraph.hpp"
#include "ksa/protocol.hpp"

namespace ksa {

// Lattice point (x_1,...,x_k) of the simplex n >= x_1 >= ... >= x_k >= 0.
struct LatticeVertex {
  std::vector<int> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  auto operator<=>(const LatticeVertex&) const = default;
};

bool is_valid_vertex(const LatticeVertex& v, int n);

// Base point y_0 and an ordering of the unit vectors; y_i = y_{i-1} + e_perm[i-1].
// perm holds 1-based coordinate indices.
struct PrimitiveSimplex {
  LatticeVertex base;
  std::vector<int> perm;

  // y_0..y_k.
  std::vector<LatticeVertex> vertices() const;
  auto operator<=>(const PrimitiveSimplex&) const = default;
};

// Barycentric support of a vertex, as sorted indices in {0..k}.
struct Carrier {
  std::vector<int> indices;

  bool contains(int j) const;
  bool operator==(const Carrier&) const = default;
};

using Coloring = std::function<Value(const LatticeVertex&)>;

struct SpernerViolation {
  LatticeVertex vertex;
  Value color;
  Carrier carrier;
};

struct SpernerReport {
  bool is_sperner = true;
  std::vector<SpernerViolation> violations;
};

// Lexicographic stream of monotone lattice points. Usage:
//   for (auto it = VertexStream(n, k); it; ++it) use(*it);
class VertexStream {
 public:
  VertexStream(int n, int k);

  explicit operator bool() const { return !done_; }
  const LatticeVertex& operator*() const { return current_; }
  const LatticeVertex* operator->() const { return &current_; }
  VertexStream& operator++();

 private:
  int n_;
  LatticeVertex current_;
  bool done_ = false;
};

// Primitive simplices fully inside the simplex, in (base, perm) lexicographic order.
class SimplexStream {
 public:
  SimplexStream(int n, int k);

  explicit operator bool() const { return !done_; }
  const PrimitiveSimplex& operator*() const { return current_; }
  const PrimitiveSimplex* operator->() const { return &current_; }
  SimplexStream& operator++();

 private:
  bool fits() const;
  bool step();

  int n_;
  VertexStream bases_;
  PrimitiveSimplex current_;
  bool done_ = false;
};

std::vector<LatticeVertex> vertices(int n, int k);
std::vector<PrimitiveSimplex> primitive_simplices(int n, int k);

// Nodes 1..x_k get input k, nodes x_{j+1}+1..x_j get input j, nodes x_1+1..n get 0.
InputConfig inp(const LatticeVertex& v, int n);

// Smallest node outside P = {x_1..x_k} \ {0} that no member of P reaches in
// H_budget. Throws AssignmentImpossible if every node is reached.
Node assign_node(const Digraph& h_budget, const LatticeVertex& v);
Node assign_node(const DynamicGraphSpec& spec, int budget, const LatticeVertex& v);

// Output of alg at assign_node(v) on inp(v) after `budget` rounds.
Value color(const DynamicGraphSpec& spec, int k, int budget, const AlgorithmSpec& alg, const LatticeVertex& v);

// {j : lambda_j(v) > 0}; asserted equal to the set of values in inp(v).
Carrier carrier(const LatticeVertex& v, int n);

SpernerReport check_sperner(int n, int k, const Coloring& coloring);

// First simplex in stream order whose colors are exactly {0..k}. Throws
// NoPanchromaticCell if none exists.
PrimitiveSimplex find_panchromatic(int n, int k, const Coloring& coloring);

// Coloring induced by a candidate algorithm, evaluated lazily and memoized.
// prefill() evaluates every vertex up front across worker threads; the
// resulting colors are the same for any thread count.
class AlgorithmColoring {
 public:
  AlgorithmColoring(DynamicGraphSpec spec, int k, int budget, AlgorithmSpec alg);

  Value operator()(const LatticeVertex& v) const;
  Node node(const LatticeVertex& v) const;
  void prefill(int threads) const;
  Coloring as_coloring() const;

 private:
  struct Entry {
    Node node;
    Value color;
  };
  Entry compute(const LatticeVertex& v) const;
  const Entry& lookup(const LatticeVertex& v) const;

  DynamicGraphSpec spec_;
  int k_;
  int budget_;
  AlgorithmSpec alg_;
  Digraph h_;
  mutable std::map<LatticeVertex, Entry> memo_;
};

}  // namespace ksa
