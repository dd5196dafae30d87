#include "clawdom/chordal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "clawdom/errors.hpp"

namespace clawdom {

namespace {

using Mask = std::uint32_t;

struct Entry {
  int cost = 0;
  std::vector<Vertex> picked;  // sorted
};

// Keyed by (selected bag vertex or -1, dominated-from-below mask).
using StateMap = std::map<std::pair<Vertex, Mask>, Entry>;

std::vector<Vertex> merge_picked(const std::vector<Vertex>& a,
                                 const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

void keep_best(StateMap& map, Vertex sel, Mask mask, Entry entry) {
  auto key = std::make_pair(sel, mask);
  auto it = map.find(key);
  if (it == map.end() || entry.cost < it->second.cost ||
      (entry.cost == it->second.cost && entry.picked < it->second.picked))
    map[key] = std::move(entry);
}

}  // namespace

VertexSet solve_chordal_clawfree(const Graph& g, const EliminationOrder& eo) {
  int n = g.n();
  if (n == 0) return {};
  if (!verify_elimination_order(g, eo))
    throw std::invalid_argument(
        "solve_chordal_clawfree: order is not a perfect elimination ordering");

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[eo.order[i]] = i;

  // Bag of v: {v} plus its later neighbors; parent is the earliest of them.
  std::vector<std::vector<Vertex>> bag(n);
  std::vector<Vertex> parent(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    bag[v].push_back(v);
    Vertex p = -1;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v]) {
        bag[v].push_back(u);
        if (p == -1 || pos[u] < pos[p]) p = u;
      }
    std::sort(bag[v].begin(), bag[v].end());
    if (static_cast<int>(bag[v].size()) > 30)
      throw std::runtime_error("solve_chordal_clawfree: bag too large");
    parent[v] = p;
  }

  auto local_index = [&](Vertex node, Vertex x) {
    const auto& b = bag[node];
    return static_cast<int>(std::lower_bound(b.begin(), b.end(), x) - b.begin());
  };

  std::vector<StateMap> states(n);
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 0; v < n; ++v)
    if (parent[v] != -1) children[parent[v]].push_back(v);

  std::vector<Vertex> by_pos(eo.order);
  for (Vertex t : by_pos) {
    StateMap acc;
    Mask full = (Mask{1} << bag[t].size()) - 1;
    acc[{-1, 0}] = Entry{0, {}};
    for (Vertex x : bag[t]) acc[{x, full}] = Entry{1, {x}};

    for (Vertex c : children[t]) {
      StateMap merged;
      for (const auto& [ck, ce] : states[c]) {
        auto [sc, mc] = ck;
        // The forgotten vertex (c itself) must be dominated below.
        if (!(mc & (Mask{1} << local_index(c, c)))) continue;
        // Project the child's dominated set and selection into t's bag.
        Mask proj = 0;
        for (size_t i = 0; i < bag[c].size(); ++i) {
          Vertex x = bag[c][i];
          if (x == c) continue;
          if (mc & (Mask{1} << i)) proj |= Mask{1} << local_index(t, x);
        }
        bool sel_shared = sc != -1 && sc != c;  // then sc lives in t's bag
        for (const auto& [ak, ae] : acc) {
          auto [sa, ma] = ak;
          if (sel_shared && sa != sc) continue;
          bool sa_shared = sa != -1 && std::binary_search(bag[c].begin(),
                                                          bag[c].end(), sa);
          if (sa_shared && sc != sa) continue;
          int cost = ae.cost + ce.cost - (sa == sc && sa != -1 ? 1 : 0);
          Entry e{cost, merge_picked(ae.picked, ce.picked)};
          keep_best(merged, sa, ma | proj, std::move(e));
        }
      }
      acc = std::move(merged);
      if (acc.empty())
        throw std::runtime_error("solve_chordal_clawfree: no feasible state");
    }
    states[t] = std::move(acc);
  }

  // Combine roots (one per connected component).
  std::vector<Vertex> picked;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] != -1) continue;
    Mask full = (Mask{1} << bag[v].size()) - 1;
    const Entry* best = nullptr;
    for (const auto& [k, e] : states[v]) {
      if (k.second != full) continue;
      if (!best || e.cost < best->cost ||
          (e.cost == best->cost && e.picked < best->picked))
        best = &e;
    }
    if (!best)
      throw std::runtime_error("solve_chordal_clawfree: no dominating state");
    picked.insert(picked.end(), best->picked.begin(), best->picked.end());
  }

  VertexSet out(std::move(picked));
  for (Vertex u : out)
    for (Vertex v : out)
      if (u < v && g.has_edge(u, v))
        throw StructureViolation("chordal DP produced a dependent set", {u, v});
  if (!is_dominating(g, out))
    throw StructureViolation("chordal DP produced a non-dominating set");
  return out;
}

}  // namespace clawdom
