#ifndef CLAWDOM_GRAPH_HPP
#define CLAWDOM_GRAPH_HPP

#include <utility>
#include <vector>

#include "clawdom/errors.hpp"

namespace clawdom {

using Vertex = int;

// Sorted set of vertex identifiers with the usual set algebra.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init);
  explicit VertexSet(std::vector<Vertex> members);  // sorts and dedupes

  static VertexSet range(int n);  // {0, ..., n-1}

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  Vertex min() const { return members_.front(); }

  std::vector<Vertex>::const_iterator begin() const { return members_.begin(); }
  std::vector<Vertex>::const_iterator end() const { return members_.end(); }

  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  bool operator==(const VertexSet& other) const = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  long long edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet closed_nb(Vertex v) const;
  VertexSet common_neighbors(Vertex u, Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted

 private:
  friend Graph build_graph(int n,
                           const std::vector<std::pair<Vertex, Vertex>>& edges);
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);

// Relabeled subgraph on s; the map sends new identifiers back to originals.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const VertexSet& s);

// Partition into connected pieces, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace clawdom

#endif  // CLAWDOM_GRAPH_HPP
