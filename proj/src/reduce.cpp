#include "clawdom/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "clawdom/detect.hpp"
#include "clawdom/errors.hpp"

namespace clawdom {

namespace {

struct Workspace {
  const Graph& g;
  std::vector<char> alive;

  explicit Workspace(const Graph& g_) : g(g_), alive(g_.n(), 1) {}

  int live_degree(Vertex v) const {
    int d = 0;
    for (Vertex u : g.neighbors(v)) d += alive[u];
    return d;
  }

  std::vector<Vertex> closed_nb_live(Vertex v) const {
    std::vector<Vertex> out{v};
    for (Vertex u : g.neighbors(v))
      if (alive[u]) out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

int LiftStack::commit_count() const {
  int c = 0;
  for (const auto& s : steps)
    if (s.kind == ReductionKind::LeafCommit) ++c;
  return c;
}

LiftStack reduce_to_kernel(const Graph& g) {
  if (auto claw = find_claw(g))
    throw StructureViolation("reduce requires a claw-free graph",
                             claw->vertices);

  Workspace ws(g);
  LiftStack stack;
  stack.original_n = g.n();

  bool progress = true;
  while (progress) {
    progress = false;

    // True twins to fixpoint: keep the smaller vertex of the smallest pair.
    bool twin_found = true;
    while (twin_found) {
      twin_found = false;
      for (Vertex u = 0; u < g.n() && !twin_found; ++u) {
        if (!ws.alive[u]) continue;
        auto nu = ws.closed_nb_live(u);
        for (Vertex v = u + 1; v < g.n(); ++v) {
          if (!ws.alive[v] || !g.has_edge(u, v)) continue;
          if (nu == ws.closed_nb_live(v)) {
            stack.steps.push_back({ReductionKind::TwinDelete,
                                   VertexSet{v}, -1, u});
            ws.alive[v] = 0;
            twin_found = true;
            progress = true;
            break;
          }
        }
      }
    }

    // Isolated vertices self-commit.
    for (Vertex v = 0; v < g.n(); ++v) {
      if (ws.alive[v] && ws.live_degree(v) == 0) {
        stack.steps.push_back({ReductionKind::LeafCommit, VertexSet{v}, v, -1});
        ws.alive[v] = 0;
        progress = true;
      }
    }

    // One leaf step: commit the support of the smallest leaf.
    for (Vertex u = 0; u < g.n(); ++u) {
      if (!ws.alive[u] || ws.live_degree(u) != 1) continue;
      Vertex support = -1;
      for (Vertex w : g.neighbors(u))
        if (ws.alive[w]) {
          support = w;
          break;
        }
      auto removed = ws.closed_nb_live(support);
      stack.steps.push_back({ReductionKind::LeafCommit, VertexSet(removed),
                             support, -1});
      for (Vertex w : removed) ws.alive[w] = 0;
      progress = true;
      break;
    }
  }

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.n(); ++v)
    if (ws.alive[v]) rest.push_back(v);
  auto [rest_graph, rest_map] = induced_subgraph(g, VertexSet(rest));
  for (const VertexSet& comp : connected_components(rest_graph)) {
    auto [kg, local_map] = induced_subgraph(rest_graph, comp);
    std::vector<Vertex> to_original(local_map.size());
    for (size_t i = 0; i < local_map.size(); ++i)
      to_original[i] = rest_map[local_map[i]];
    stack.kernels.push_back(std::move(kg));
    stack.kernel_maps.push_back(std::move(to_original));
  }
  return stack;
}

VertexSet lift_solution(const Graph& original, const LiftStack& stack,
                        const std::vector<VertexSet>& kernel_sets) {
  if (kernel_sets.size() != stack.kernels.size())
    throw std::invalid_argument("lift_solution: kernel set count mismatch");
  std::vector<Vertex> out;
  for (size_t i = 0; i < kernel_sets.size(); ++i) {
    const Graph& kg = stack.kernels[i];
    const auto& set = kernel_sets[i];
    for (Vertex v : set)
      if (v < 0 || v >= kg.n())
        throw std::invalid_argument("lift_solution: vertex outside kernel");
    if (!is_dominating(kg, set))
      throw std::invalid_argument(
          "lift_solution: kernel set is not dominating its component");
    for (Vertex v : set) out.push_back(stack.kernel_maps[i][v]);
  }
  for (const auto& step : stack.steps)
    if (step.kind == ReductionKind::LeafCommit) out.push_back(step.committed);
  VertexSet lifted(std::move(out));
  if (!is_dominating(original, lifted))
    throw StructureViolation("lifted set fails to dominate the original graph");
  return lifted;
}

}  // namespace clawdom
