#ifndef CLAWDOM_CHORDAL_HPP
#define CLAWDOM_CHORDAL_HPP

#include "clawdom/detect.hpp"
#include "clawdom/graph.hpp"

namespace clawdom {

// Minimum independent dominating set of a chordal graph, computed by dynamic
// programming over the elimination tree: each bag {v} u RN(v) is a clique, so
// at most one bag vertex is selected; states track which bag vertices are
// already dominated from below. Runtime is exponential in the largest bag in
// the worst case (sparse state maps keep it small on this corpus). On a
// claw-free input the result is a minimum dominating set since gamma = i
// holds for claw-free graphs.
VertexSet solve_chordal_clawfree(const Graph& g, const EliminationOrder& order);

}  // namespace clawdom

#endif  // CLAWDOM_CHORDAL_HPP
