#include "ksa/dyngraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ksa/errors.hpp"

namespace ksa {

namespace {

using Mask = std::uint64_t;

constexpr int kMaskBits = 64;

Mask bit(Node u) { return Mask{1} << (u - 1); }

Mask all_nodes(int n) { return n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

// cover[u-1]: nodes dominated by u (u itself and its out-neighbors).
std::vector<Mask> cover_masks(const Digraph& h) {
  std::vector<Mask> cover(h.n(), 0);
  for (Node u = 1; u <= h.n(); ++u) {
    cover[u - 1] = bit(u);
    for (Node v = 1; v <= h.n(); ++v) {
      if (h.has_arc(u, v)) cover[u - 1] |= bit(v);
    }
  }
  return cover;
}

std::vector<Node> members_of(Mask m) {
  std::vector<Node> out;
  for (Node u = 1; m != 0; ++u, m >>= 1) {
    if (m & 1) out.push_back(u);
  }
  return out;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Digraph& h) : n_(h.n()), full_(all_nodes(h.n())), cover_(cover_masks(h)) {
    dominators_.assign(n_, 0);
    for (Node u = 1; u <= n_; ++u) {
      for (Node v = 1; v <= n_; ++v) {
        if (cover_[u - 1] & bit(v)) dominators_[v - 1] |= bit(u);
      }
    }
  }

  Mask solve(int upper_bound) {
    best_size_ = upper_bound + 1;
    best_ = 0;
    search(1, 0, 0, 0);
    return best_;
  }

 private:
  // Nodes are decided in increasing id order, include before exclude, so the
  // first optimum reached is the lexicographically smallest one.
  void search(Node next, Mask chosen, Mask covered, int count) {
    if (covered == full_) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    if (next > n_ || count + 1 >= best_size_) return;

    const Mask candidates = full_ & ~(bit(next) - 1);
    const Mask open = full_ & ~covered;
    for (Mask rest = open; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((dominators_[v] & candidates) == 0) return;
    }

    int max_gain = 0;
    for (Node u = next; u <= n_; ++u) {
      max_gain = std::max(max_gain, std::popcount(cover_[u - 1] & open));
    }
    const int uncovered = std::popcount(open);
    const int lower = (uncovered + max_gain - 1) / max_gain;
    if (count + lower >= best_size_) return;

    // A node adding no coverage is redundant in any minimum set.
    if ((cover_[next - 1] & open) != 0) {
      search(next + 1, chosen | bit(next), covered | cover_[next - 1], count + 1);
    }
    search(next + 1, chosen, covered, count);
  }

  int n_;
  Mask full_;
  std::vector<Mask> cover_;
  std::vector<Mask> dominators_;
  int best_size_ = 0;
  Mask best_ = 0;
};

Extension parse_extension(const std::string& s) {
  if (s == "repeat_last") return Extension::RepeatLast;
  if (s == "cycle") return Extension::Cycle;
  throw InvalidArgument("unknown extension rule '" + s + "'");
}

}  // namespace

DynamicGraphSpec::DynamicGraphSpec(int n, std::vector<ArcList> rounds, Extension extension)
    : n_(n), rounds_(std::move(rounds)), extension_(extension) {
  if (n_ < 2) throw InvalidArgument("graph needs at least 2 nodes, got " + std::to_string(n_));
  if (rounds_.empty()) throw InvalidArgument("graph sequence needs at least one round");
  for (std::size_t t = 0; t < rounds_.size(); ++t) {
    auto& arcs = rounds_[t];
    for (const auto& [u, v] : arcs) {
      if (u < 1 || u > n_ || v < 1 || v > n_) {
        throw InvalidArgument("round " + std::to_string(t + 1) + ": arc (" + std::to_string(u) + "," +
                              std::to_string(v) + ") out of range [1," + std::to_string(n_) + "]");
      }
      if (u == v) {
        throw InvalidArgument("round " + std::to_string(t + 1) + ": self-loop at node " + std::to_string(u));
      }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  }
}

DynamicGraphSpec DynamicGraphSpec::constant(int n, ArcList arcs) {
  return DynamicGraphSpec(n, {std::move(arcs)}, Extension::RepeatLast);
}

Digraph::Digraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw InvalidArgument("digraph needs at least one node");
}

Digraph::Digraph(int n, const ArcList& arcs) : Digraph(n) {
  for (const auto& [u, v] : arcs) add_arc(u, v);
}

std::size_t Digraph::index(Node u, Node v) const {
  return static_cast<std::size_t>(u - 1) * n_ + static_cast<std::size_t>(v - 1);
}

void Digraph::add_arc(Node u, Node v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw InvalidArgument("arc endpoint out of range");
  adj_[index(u, v)] = 1;
}

ArcList Digraph::arcs() const {
  ArcList out;
  for (Node u = 1; u <= n_; ++u) {
    for (Node v = 1; v <= n_; ++v) {
      if (has_arc(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Digraph::arc_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1}));
}

std::vector<Node> Digraph::out_neighbors(Node u) const {
  std::vector<Node> out;
  for (Node v = 1; v <= n_; ++v) {
    if (has_arc(u, v)) out.push_back(v);
  }
  return out;
}

std::vector<Node> Digraph::in_neighbors(Node v) const {
  std::vector<Node> out;
  for (Node u = 1; u <= n_; ++u) {
    if (has_arc(u, v)) out.push_back(u);
  }
  return out;
}

Digraph Digraph::complete(int n) {
  Digraph g(n);
  for (Node u = 1; u <= n; ++u) {
    for (Node v = 1; v <= n; ++v) g.add_arc(u, v);
  }
  return g;
}

Digraph Digraph::identity(int n) {
  Digraph g(n);
  for (Node u = 1; u <= n; ++u) g.add_arc(u, u);
  return g;
}

Digraph graph_at(const DynamicGraphSpec& spec, int t) {
  if (t < 1) throw InvalidArgument("rounds are numbered from 1");
  const auto m = static_cast<int>(spec.rounds().size());
  int idx = t - 1;
  if (t > m) idx = spec.extension() == Extension::RepeatLast ? m - 1 : (t - 1) % m;
  return Digraph(spec.n(), spec.rounds()[idx]);
}

std::vector<Digraph> closures_up_to(const DynamicGraphSpec& spec, int max_r) {
  if (max_r < 0) throw InvalidArgument("closure radius must be non-negative");
  std::vector<Digraph> out;
  out.reserve(static_cast<std::size_t>(max_r) + 1);
  out.push_back(Digraph::identity(spec.n()));
  for (int t = 1; t <= max_r; ++t) {
    const Digraph& prev = out.back();
    Digraph next = prev;
    for (const auto& [w, v] : graph_at(spec, t).arcs()) {
      for (Node u = 1; u <= spec.n(); ++u) {
        if (prev.has_arc(u, w)) next.add_arc(u, v);
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

Digraph closure(const DynamicGraphSpec& spec, int r) { return closures_up_to(spec, r).back(); }

bool is_dominating(const Digraph& h, const std::vector<Node>& members) {
  for (Node v = 1; v <= h.n(); ++v) {
    const bool hit = std::any_of(members.begin(), members.end(),
                                 [&](Node u) { return u == v || h.has_arc(u, v); });
    if (!hit) return false;
  }
  return true;
}

DominatingSetResult greedy_dominating_set(const Digraph& h) {
  const int n = h.n();
  std::vector<bool> covered(n + 1, false);
  int remaining = n;
  std::vector<Node> chosen;
  while (remaining > 0) {
    Node pick = 0;
    int best_gain = -1;
    for (Node u = 1; u <= n; ++u) {
      int gain = 0;
      for (Node v = 1; v <= n; ++v) {
        if (!covered[v] && (u == v || h.has_arc(u, v))) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        pick = u;
      }
    }
    chosen.push_back(pick);
    for (Node v = 1; v <= n; ++v) {
      if (!covered[v] && (pick == v || h.has_arc(pick, v))) {
        covered[v] = true;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return {static_cast<int>(chosen.size()), chosen, false};
}

DominatingSetResult min_dominating_set(const Digraph& h, const DominationOptions& options) {
  const int cap = std::min(options.exact_cap, kMaskBits);
  if (h.n() > cap) {
    throw CapExceeded("exact domination limited to n <= " + std::to_string(cap) + ", got n = " +
                      std::to_string(h.n()));
  }
  const auto greedy = greedy_dominating_set(h);
  const Mask best = BranchAndBound(h).solve(greedy.size);
  auto members = members_of(best);
  return {static_cast<int>(members.size()), std::move(members), true};
}

int min_rounds(const DynamicGraphSpec& spec, int k, int max_rounds, const DominationOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (max_rounds < 1) throw InvalidArgument("max_rounds must be at least 1");
  const auto hs = closures_up_to(spec, max_rounds);
  for (int r = 1; r <= max_rounds; ++r) {
    if (min_dominating_set(hs[r], options).size <= k) return r;
  }
  throw NotDominatedWithinCap("no dominating set of size <= " + std::to_string(k) + " in H_1..H_" +
                              std::to_string(max_rounds));
}

DynamicGraphSpec parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("graph file is not valid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    std::vector<ArcList> rounds;
    for (const auto& round : doc.at("rounds")) {
      ArcList arcs;
      for (const auto& arc : round) {
        if (!arc.is_array() || arc.size() != 2) throw InvalidArgument("arc must be a pair [u, v]");
        arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
      }
      rounds.push_back(std::move(arcs));
    }
    Extension ext = Extension::RepeatLast;
    if (doc.contains("extension")) ext = parse_extension(doc.at("extension").get<std::string>());
    return DynamicGraphSpec(n, std::move(rounds), ext);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed graph file: ") + e.what());
  }
}

DynamicGraphSpec load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

std::string to_graph_json(const DynamicGraphSpec& spec) {
  nlohmann::ordered_json doc;
  doc["n"] = spec.n();
  auto rounds = nlohmann::ordered_json::array();
  for (const auto& arcs : spec.rounds()) {
    auto round = nlohmann::ordered_json::array();
    for (const auto& [u, v] : arcs) round.push_back({u, v});
    rounds.push_back(std::move(round));
  }
  doc["rounds"] = std::move(rounds);
  doc["extension"] = spec.extension() == Extension::RepeatLast ? "repeat_last" : "cycle";
  return doc.dump();
}

std::string to_dot(const Digraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (const auto& [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ksa
