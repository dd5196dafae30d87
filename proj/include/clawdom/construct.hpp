#ifndef CLAWDOM_CONSTRUCT_HPP
#define CLAWDOM_CONSTRUCT_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "clawdom/anatomy.hpp"
#include "clawdom/detect.hpp"
#include "clawdom/graph.hpp"

namespace clawdom {

enum class Completion { None, Singleton, Pair, Triple, Fallback };

const char* completion_name(Completion c);

struct BranchResult {
  VertexSet set;
  std::string branch;  // e.g. "C5/Z13"
  Completion completion = Completion::None;
};

// Candidate pools for finishing a base set. Tiers are scanned in order
// (base alone, singles, pairs, triples) in ascending identifiers; the
// fallback closes the search and must dominate together with the base.
struct CompletionSpec {
  std::vector<VertexSet> singles;
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  std::vector<std::array<VertexSet, 3>> triples;
  VertexSet fallback;
};

std::pair<VertexSet, Completion> complete_base(const Graph& g,
                                               const VertexSet& base,
                                               const CompletionSpec& spec);

// Long-cycle cases: N[V(c)] must be all of V; bounded search with cap m.
BranchResult solve_cycle_dominates_all(const Graph& g, const InducedWitness& c);

// C4 spine in a (claw,P6,C6,C5)-free graph.
BranchResult solve_c4_p6(const Graph& g, const InducedWitness& c4);

// C6 spine in a (claw,P8,C8,C7)-free graph.
BranchResult solve_c6_p8(const Graph& g, const InducedWitness& c6);

// C5 spine in a (claw,C6,C7,C8,P8)-free graph.
BranchResult solve_c5_p8(const Graph& g, const InducedWitness& c5);

// C5 spine in a (claw,P7,C7,C6)-free graph: |W| <= 1 holds, bounded search.
BranchResult solve_c5_p7_small(const Graph& g, const InducedWitness& c5);

// P7 spine in a (claw,C5,C6,C7,C8,P8)-free graph.
BranchResult solve_p7_p8(const Graph& g, const InducedWitness& p7);

// P6 spine in a (claw,C5,C6,C7,P7)-free graph.
BranchResult solve_p6_p7(const Graph& g, const InducedWitness& p6);

}  // namespace clawdom

#endif  // CLAWDOM_CONSTRUCT_HPP
