#include "clawdom/graph.hpp"

#include <algorithm>
#include <string>

namespace clawdom {

VertexSet::VertexSet(std::initializer_list<Vertex> init)
    : VertexSet(std::vector<Vertex>(init)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.members_.resize(n);
  for (int i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet out;
  out.members_.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex w = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

VertexSet Graph::closed_nb(Vertex v) const {
  std::vector<Vertex> m = adj_[v];
  m.push_back(v);
  return VertexSet(std::move(m));
}

VertexSet Graph::common_neighbors(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError(GraphError::Kind::OutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw GraphError(GraphError::Kind::SelfLoop,
                       "self-loop at " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "duplicate edge at vertex " + std::to_string(v));
  }
  g.m_ = static_cast<long long>(edges.size());
  return g;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> mark(g.n(), 0);
  for (Vertex v : s) {
    mark[v] = 1;
    for (Vertex u : g.neighbors(v)) mark[u] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (mark[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  return closed_neighborhood(g, s).size() == g.n();
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const VertexSet& s) {
  std::vector<Vertex> to_old(s.begin(), s.end());
  std::vector<Vertex> to_new(g.n(), -1);
  for (int i = 0; i < static_cast<int>(to_old.size()); ++i)
    to_new[to_old[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : s)
    for (Vertex v : g.neighbors(u))
      if (u < v && to_new[v] >= 0) edges.emplace_back(to_new[u], to_new[v]);
  return {build_graph(static_cast<int>(to_old.size()), edges), to_old};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> stack{s}, comp;
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

}  // namespace clawdom
