#include "clawdom/exact.hpp"

#include <algorithm>
#include <cassert>

namespace clawdom {

namespace {

struct SearchState {
  const Graph& g;
  std::vector<int> cover;  // number of chosen dominators covering each vertex
  std::vector<char> chosen;
  std::vector<Vertex> stack;
  int undominated;

  explicit SearchState(const Graph& g_)
      : g(g_), cover(g_.n(), 0), chosen(g_.n(), 0), undominated(g_.n()) {}

  void choose(Vertex v) {
    chosen[v] = 1;
    stack.push_back(v);
    if (cover[v]++ == 0) --undominated;
    for (Vertex u : g.neighbors(v))
      if (cover[u]++ == 0) --undominated;
  }

  void unchoose() {
    Vertex v = stack.back();
    stack.pop_back();
    chosen[v] = 0;
    if (--cover[v] == 0) ++undominated;
    for (Vertex u : g.neighbors(v))
      if (--cover[u] == 0) ++undominated;
  }

  int max_coverage() const {
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      int c = cover[v] == 0 ? 1 : 0;
      for (Vertex u : g.neighbors(v))
        if (cover[u] == 0) ++c;
      best = std::max(best, c);
    }
    return best;
  }

  Vertex pick_undominated() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (cover[v] != 0) continue;
      if (best == -1 || g.degree(v) < g.degree(best)) best = v;
    }
    return best;
  }

  bool dfs(int budget) {
    if (undominated == 0) return true;
    if (budget == 0) return false;
    if (undominated > budget * max_coverage()) return false;
    Vertex v = pick_undominated();
    std::vector<Vertex> cands = g.closed_nb(v).members();
    for (Vertex c : cands) {
      if (chosen[c]) continue;
      choose(c);
      if (dfs(budget - 1)) return true;
      unchoose();
    }
    return false;
  }
};

}  // namespace

VertexSet greedy_dominating_set(const Graph& g) {
  std::vector<int> cover(g.n(), 0);
  int undominated = g.n();
  std::vector<Vertex> picked;
  while (undominated > 0) {
    Vertex best = -1;
    int best_gain = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      int gain = cover[v] == 0 ? 1 : 0;
      for (Vertex u : g.neighbors(v))
        if (cover[u] == 0) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    picked.push_back(best);
    if (cover[best]++ == 0) --undominated;
    for (Vertex u : g.neighbors(best))
      if (cover[u]++ == 0) --undominated;
  }
  return VertexSet(std::move(picked));
}

std::optional<VertexSet> mds_bounded(const Graph& g, int cap) {
  if (g.n() == 0) return VertexSet{};
  VertexSet greedy = greedy_dominating_set(g);
  int limit = std::min(cap, greedy.size());
  SearchState st(g);
  for (int d = 1; d <= limit; ++d) {
    if (st.dfs(d)) {
      VertexSet out(st.stack);
      assert(is_dominating(g, out));
      return out;
    }
  }
  if (greedy.size() <= cap) return greedy;  // unreachable: dfs finds at d=gamma
  return std::nullopt;
}

VertexSet mds_exact(const Graph& g) {
  if (g.n() == 0) return VertexSet{};
  auto r = mds_bounded(g, g.n());
  assert(r.has_value());  // V itself dominates
  return *r;
}

}  // namespace clawdom
