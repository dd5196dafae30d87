#ifndef CLAWDOM_DETECT_HPP
#define CLAWDOM_DETECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "clawdom/graph.hpp"

namespace clawdom {

enum class WitnessKind { Claw, Path, Cycle };

// Ordered vertex sequence proving the presence of an induced claw / P_k / C_k.
// Claw witnesses are (center, a, b, c).
struct InducedWitness {
  WitnessKind kind = WitnessKind::Path;
  std::vector<Vertex> vertices;

  int k() const { return static_cast<int>(vertices.size()); }
  bool verify(const Graph& g) const;
  std::string to_string() const;
};

std::optional<InducedWitness> find_claw(const Graph& g);

// Induced P_k, 1 <= k <= 8. Backtracking extension of a partial induced path;
// worst-case exponential, exact. Candidates explored in ascending order.
std::optional<InducedWitness> find_induced_path(const Graph& g, int k);

// Induced C_k, 4 <= k <= 8. Seeded from each vertex in ascending order, the
// seed being the smallest vertex of the cycle found.
std::optional<InducedWitness> find_induced_cycle(const Graph& g, int k);

struct EliminationOrder {
  std::vector<Vertex> order;  // order[0] eliminated first
};

// True iff for each vertex its later neighbors form a clique.
bool verify_elimination_order(const Graph& g, const EliminationOrder& order);

// Lex-BFS; the reversed visit order is returned iff it verifies as a perfect
// elimination ordering, i.e. iff g is chordal.
std::optional<EliminationOrder> lexbfs_elimination(const Graph& g);

}  // namespace clawdom

#endif  // CLAWDOM_DETECT_HPP
