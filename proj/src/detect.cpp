#include "clawdom/detect.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace clawdom {

bool InducedWitness::verify(const Graph& g) const {
  const auto& vs = vertices;
  for (Vertex v : vs)
    if (v < 0 || v >= g.n()) return false;
  std::vector<Vertex> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;

  switch (kind) {
    case WitnessKind::Claw: {
      if (vs.size() != 4) return false;
      Vertex c = vs[0];
      for (int i = 1; i < 4; ++i)
        if (!g.has_edge(c, vs[i])) return false;
      for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (g.has_edge(vs[i], vs[j])) return false;
      return true;
    }
    case WitnessKind::Path: {
      int k = static_cast<int>(vs.size());
      if (k < 1) return false;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          bool want = (j == i + 1);
          if (g.has_edge(vs[i], vs[j]) != want) return false;
        }
      return true;
    }
    case WitnessKind::Cycle: {
      int k = static_cast<int>(vs.size());
      if (k < 3) return false;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          bool want = (j == i + 1) || (i == 0 && j == k - 1);
          if (g.has_edge(vs[i], vs[j]) != want) return false;
        }
      return true;
    }
  }
  return false;
}

std::string InducedWitness::to_string() const {
  std::string out;
  switch (kind) {
    case WitnessKind::Claw: out = "claw:"; break;
    case WitnessKind::Path: out = "P" + std::to_string(k()) + ":"; break;
    case WitnessKind::Cycle: out = "C" + std::to_string(k()) + ":"; break;
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(vertices[i]);
  }
  return out;
}

std::optional<InducedWitness> find_claw(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbors(v);
    int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (int l = j + 1; l < d; ++l) {
          if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
          InducedWitness w{WitnessKind::Claw, {v, nb[i], nb[j], nb[l]}};
          assert(w.verify(g));
          return w;
        }
      }
  }
  return std::nullopt;
}

namespace {

bool extend_path(const Graph& g, std::vector<Vertex>& path,
                 std::vector<char>& used, int k) {
  if (static_cast<int>(path.size()) == k) return true;
  Vertex last = path.back();
  for (Vertex c : g.neighbors(last)) {
    if (used[c]) continue;
    bool ok = true;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (g.has_edge(c, path[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    path.push_back(c);
    used[c] = 1;
    if (extend_path(g, path, used, k)) return true;
    used[c] = 0;
    path.pop_back();
  }
  return false;
}

// Partial sequence for a cycle: consecutive adjacent, all other pairs
// non-adjacent except (first,last) which must close the cycle.
bool extend_cycle(const Graph& g, std::vector<Vertex>& seq,
                  std::vector<char>& used, int k) {
  int t = static_cast<int>(seq.size());
  if (t == k) return g.has_edge(seq.front(), seq.back());
  Vertex last = seq.back();
  for (Vertex c : g.neighbors(last)) {
    if (used[c] || c < seq.front()) continue;  // seed is the cycle minimum
    bool closing = (t == k - 1);
    if (!closing && t >= 2 && g.has_edge(c, seq.front())) continue;
    if (closing && !g.has_edge(c, seq.front())) continue;
    bool ok = true;
    for (int i = 1; i + 1 < t; ++i)
      if (g.has_edge(c, seq[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    seq.push_back(c);
    used[c] = 1;
    if (extend_cycle(g, seq, used, k)) return true;
    used[c] = 0;
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::optional<InducedWitness> find_induced_path(const Graph& g, int k) {
  if (k < 1 || k > 8) throw std::invalid_argument("find_induced_path: k must be 1..8");
  if (k == 1) {
    if (g.n() == 0) return std::nullopt;
    InducedWitness w{WitnessKind::Path, {0}};
    return w;
  }
  std::vector<char> used(g.n(), 0);
  std::vector<Vertex> path;
  for (Vertex s = 0; s < g.n(); ++s) {
    path.assign(1, s);
    used.assign(g.n(), 0);
    used[s] = 1;
    if (extend_path(g, path, used, k)) {
      InducedWitness w{WitnessKind::Path, path};
      assert(w.verify(g));
      return w;
    }
  }
  return std::nullopt;
}

std::optional<InducedWitness> find_induced_cycle(const Graph& g, int k) {
  if (k < 4 || k > 8) throw std::invalid_argument("find_induced_cycle: k must be 4..8");
  std::vector<char> used(g.n(), 0);
  std::vector<Vertex> seq;
  for (Vertex s = 0; s < g.n(); ++s) {
    seq.assign(1, s);
    used.assign(g.n(), 0);
    used[s] = 1;
    if (extend_cycle(g, seq, used, k)) {
      InducedWitness w{WitnessKind::Cycle, seq};
      assert(w.verify(g));
      return w;
    }
  }
  return std::nullopt;
}

bool verify_elimination_order(const Graph& g, const EliminationOrder& eo) {
  int n = g.n();
  if (static_cast<int>(eo.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = eo.order[i];
    if (v < 0 || v >= n || pos[v] != -1) return false;
    pos[v] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v]) later.push_back(u);
    if (later.empty()) continue;
    Vertex parent = later.front();
    for (Vertex u : later)
      if (pos[u] < pos[parent]) parent = u;
    for (Vertex u : later)
      if (u != parent && !g.has_edge(parent, u)) return false;
  }
  return true;
}

std::optional<EliminationOrder> lexbfs_elimination(const Graph& g) {
  int n = g.n();
  std::vector<std::vector<int>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> visit_order;
  visit_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == -1 || label[v] > label[best]) best = v;
    }
    visited[best] = 1;
    visit_order.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!visited[u]) label[u].push_back(n - step);
  }
  EliminationOrder eo;
  eo.order.assign(visit_order.rbegin(), visit_order.rend());
  if (!verify_elimination_order(g, eo)) return std::nullopt;
  return eo;
}

}  // namespace clawdom
