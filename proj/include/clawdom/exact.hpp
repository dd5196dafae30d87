#ifndef CLAWDOM_EXACT_HPP
#define CLAWDOM_EXACT_HPP

#include <optional>

#include "clawdom/graph.hpp"

namespace clawdom {

// Greedy cover: repeatedly add the vertex dominating the most undominated
// vertices (ties: smallest identifier). Used as an upper bound.
VertexSet greedy_dominating_set(const Graph& g);

// Smallest dominating set of size <= cap, or nullopt. Iterative deepening on
// the solution size; at each node the undominated vertex of minimum degree is
// selected and the branch runs over its closed neighborhood in ascending
// order, so the output is deterministic.
std::optional<VertexSet> mds_bounded(const Graph& g, int cap);

// Exact minimum dominating set; intended as a verification oracle at desk
// scale (the search is exponential in gamma).
VertexSet mds_exact(const Graph& g);

}  // namespace clawdom

#endif  // CLAWDOM_EXACT_HPP
