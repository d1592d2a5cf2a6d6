#include "ksa/kuhn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "ksa/errors.hpp"

namespace ksa {

namespace {

void require_shape(int n, int k) {
  if (n < 1) throw InvalidArgument("triangulation side n must be at least 1");
  if (k < 1) throw InvalidArgument("triangulation dimension k must be at least 1");
}

}  // namespace

bool is_valid_vertex(const LatticeVertex& v, int n) {
  int upper = n;
  for (int x : v.coords) {
    if (x < 0 || x > upper) return false;
    upper = x;
  }
  return true;
}

std::vector<LatticeVertex> PrimitiveSimplex::vertices() const {
  std::vector<LatticeVertex> out;
  out.reserve(perm.size() + 1);
  out.push_back(base);
  for (int axis : perm) {
    LatticeVertex next = out.back();
    ++next.coords[static_cast<std::size_t>(axis - 1)];
    out.push_back(std::move(next));
  }
  return out;
}

bool Carrier::contains(int j) const { return std::binary_search(indices.begin(), indices.end(), j); }

VertexStream::VertexStream(int n, int k) : n_(n) {
  require_shape(n, k);
  current_.coords.assign(static_cast<std::size_t>(k), 0);
}

VertexStream& VertexStream::operator++() {
  auto& x = current_.coords;
  // Odometer: bump the rightmost coordinate still below its bound, zero the rest.
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    const int bound = i == 0 ? n_ : x[static_cast<std::size_t>(i - 1)];
    if (x[static_cast<std::size_t>(i)] < bound) {
      ++x[static_cast<std::size_t>(i)];
      std::fill(x.begin() + i + 1, x.end(), 0);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

SimplexStream::SimplexStream(int n, int k) : n_(n), bases_(n, k) {
  current_.base = *bases_;
  current_.perm.resize(static_cast<std::size_t>(k));
  std::iota(current_.perm.begin(), current_.perm.end(), 1);
  if (!fits()) ++(*this);
}

bool SimplexStream::fits() const {
  // Only the walk y_0 -> y_k can leave the simplex; y_0 is valid by construction.
  LatticeVertex y = current_.base;
  for (int axis : current_.perm) {
    ++y.coords[static_cast<std::size_t>(axis - 1)];
    if (!is_valid_vertex(y, n_)) return false;
  }
  return true;
}

bool SimplexStream::step() {
  if (std::next_permutation(current_.perm.begin(), current_.perm.end())) return true;
  ++bases_;
  if (!bases_) return false;
  current_.base = *bases_;
  return true;
}

SimplexStream& SimplexStream::operator++() {
  while (true) {
    if (!step()) {
      done_ = true;
      return *this;
    }
    if (fits()) return *this;
  }
}

std::vector<LatticeVertex> vertices(int n, int k) {
  std::vector<LatticeVertex> out;
  for (VertexStream it(n, k); it; ++it) out.push_back(*it);
  return out;
}

std::vector<PrimitiveSimplex> primitive_simplices(int n, int k) {
  std::vector<PrimitiveSimplex> out;
  for (SimplexStream it(n, k); it; ++it) out.push_back(*it);
  return out;
}

InputConfig inp(const LatticeVertex& v, int n) {
  if (!is_valid_vertex(v, n)) throw InvalidArgument("vertex is not a monotone lattice point of side n");
  const int k = v.dim();
  std::vector<Value> values(static_cast<std::size_t>(n), 0);
  // Walk from the highest value down: x_k nodes get k, then x_{k-1} - x_k get k-1, ...
  int start = 0;
  for (int j = k; j >= 1; --j) {
    const int end = v.coords[static_cast<std::size_t>(j - 1)];
    for (int node = start; node < end; ++node) values[static_cast<std::size_t>(node)] = j;
    start = std::max(start, end);
  }
  return InputConfig(std::move(values));
}

Node assign_node(const Digraph& h_budget, const LatticeVertex& v) {
  const int n = h_budget.n();
  if (!is_valid_vertex(v, n)) throw InvalidArgument("vertex is not a monotone lattice point of side n");
  std::set<Node> sources;
  for (int x : v.coords) {
    if (x > 0) sources.insert(x);
  }
  for (Node w = 1; w <= n; ++w) {
    if (sources.contains(w)) continue;
    const bool reached = std::any_of(sources.begin(), sources.end(), [&](Node p) { return h_budget.has_arc(p, w); });
    if (!reached) return w;
  }
  throw AssignmentImpossible("every node hears from the coordinate nodes of the vertex; budget is not below the bound");
}

Node assign_node(const DynamicGraphSpec& spec, int budget, const LatticeVertex& v) {
  return assign_node(closure(spec, budget), v);
}

Value color(const DynamicGraphSpec& spec, int k, int budget, const AlgorithmSpec& alg, const LatticeVertex& v) {
  if (v.dim() != k) throw InvalidArgument("vertex dimension differs from k");
  const Digraph h = closure(spec, budget);
  const InputConfig config = inp(v, spec.n());
  return decide_checked(alg, spec, k, view_in(h, config, assign_node(h, v), budget));
}

Carrier carrier(const LatticeVertex& v, int n) {
  if (!is_valid_vertex(v, n)) throw InvalidArgument("vertex is not a monotone lattice point of side n");
  const int k = v.dim();
  const auto& x = v.coords;
  // n * lambda_j: n - x_1, x_j - x_{j+1}, ..., x_k.
  std::vector<int> weight(static_cast<std::size_t>(k) + 1);
  weight[0] = n - x[0];
  for (int j = 1; j < k; ++j) weight[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j - 1)] - x[static_cast<std::size_t>(j)];
  weight[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k - 1)];

  Carrier c;
  for (int j = 0; j <= k; ++j) {
    if (weight[static_cast<std::size_t>(j)] > 0) c.indices.push_back(j);
  }

  const auto values = inp(v, n).values();
  const std::set<int> present(values.begin(), values.end());
  if (!std::equal(present.begin(), present.end(), c.indices.begin(), c.indices.end())) {
    throw LemmaFalsified("barycentric carrier differs from the input values of inp(v)");
  }
  return c;
}

SpernerReport check_sperner(int n, int k, const Coloring& coloring) {
  SpernerReport report;
  for (VertexStream it(n, k); it; ++it) {
    const Value c = coloring(*it);
    Carrier support = carrier(*it, n);
    if (!support.contains(c)) report.violations.push_back({*it, c, std::move(support)});
  }
  report.is_sperner = report.violations.empty();
  return report;
}

PrimitiveSimplex find_panchromatic(int n, int k, const Coloring& coloring) {
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1);
  for (SimplexStream it(n, k); it; ++it) {
    std::fill(seen.begin(), seen.end(), false);
    bool all = true;
    for (const auto& y : it->vertices()) {
      const Value c = coloring(y);
      if (c < 0 || c > k || seen[static_cast<std::size_t>(c)]) {
        all = false;
        break;
      }
      seen[static_cast<std::size_t>(c)] = true;
    }
    if (all) return *it;
  }
  throw NoPanchromaticCell("no primitive simplex carries all " + std::to_string(k + 1) +
                           " colors; the coloring is not Sperner");
}

AlgorithmColoring::AlgorithmColoring(DynamicGraphSpec spec, int k, int budget, AlgorithmSpec alg)
    : spec_(std::move(spec)), k_(k), budget_(budget), alg_(std::move(alg)), h_(closure(spec_, budget)) {}

AlgorithmColoring::Entry AlgorithmColoring::compute(const LatticeVertex& v) const {
  const InputConfig config = inp(v, spec_.n());
  const Node w = assign_node(h_, v);
  return {w, decide_checked(alg_, spec_, k_, view_in(h_, config, w, budget_))};
}

const AlgorithmColoring::Entry& AlgorithmColoring::lookup(const LatticeVertex& v) const {
  auto it = memo_.find(v);
  if (it == memo_.end()) it = memo_.emplace(v, compute(v)).first;
  return it->second;
}

Value AlgorithmColoring::operator()(const LatticeVertex& v) const { return lookup(v).color; }

Node AlgorithmColoring::node(const LatticeVertex& v) const { return lookup(v).node; }

void AlgorithmColoring::prefill(int threads) const {
  const auto all = vertices(spec_.n(), k_);
  std::vector<std::optional<Entry>> entries(all.size());
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    for (std::size_t i = 0; i < all.size(); ++i) entries[i] = compute(all[i]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < all.size(); i += workers) entries[i] = compute(all[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (std::any_of(errors.begin(), errors.end(), [](const auto& e) { return e != nullptr; })) {
      // Replay in order so the reported failure is the first one in stream order.
      for (const auto& v : all) lookup(v);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) memo_.emplace(all[i], *entries[i]);
}

Coloring AlgorithmColoring::as_coloring() const {
  return [this](const LatticeVertex& v) { return (*this)(v); };
}

}  // namespace ksa
