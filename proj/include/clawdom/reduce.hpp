#ifndef CLAWDOM_REDUCE_HPP
#define CLAWDOM_REDUCE_HPP

#include <vector>

#include "clawdom/graph.hpp"

namespace clawdom {

enum class ReductionKind { TwinDelete, LeafCommit };

// twin_delete: removed is one vertex u with N[u] = N[survivor] in the
// pre-step graph. leaf_commit: committed is the support v, removed is N[v]
// in the pre-step graph (isolated vertices self-commit with removed = {v}).
struct ReductionStep {
  ReductionKind kind = ReductionKind::TwinDelete;
  VertexSet removed;       // original identifiers
  Vertex committed = -1;   // leaf_commit only
  Vertex survivor = -1;    // twin_delete only
};

struct LiftStack {
  int original_n = 0;
  std::vector<ReductionStep> steps;
  std::vector<Graph> kernels;                    // irreducible components
  std::vector<std::vector<Vertex>> kernel_maps;  // kernel-local -> original
  int commit_count() const;
};

// Exhaustively applies the two gamma-preserving rules: true-twin deletion to
// fixpoint (lexicographically smallest pair first, larger vertex removed),
// then isolated-vertex self-commits, then one leaf step, repeated. Requires a
// claw-free input; a claw witness raises StructureViolation.
LiftStack reduce_to_kernel(const Graph& g);

// Maps dominating sets of the kernel components back to a dominating set of
// the original graph: identity on twin deletions plus the committed supports.
VertexSet lift_solution(const Graph& original, const LiftStack& stack,
                        const std::vector<VertexSet>& kernel_sets);

}  // namespace clawdom

#endif  // CLAWDOM_REDUCE_HPP
