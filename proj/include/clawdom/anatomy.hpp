#ifndef CLAWDOM_ANATOMY_HPP
#define CLAWDOM_ANATOMY_HPP

#include <map>
#include <vector>

#include "clawdom/detect.hpp"
#include "clawdom/graph.hpp"

namespace clawdom {

// Rotation/reflection of a cycle labeling: v_i = spine[(offset +/- (i-1)) mod m].
struct SpineLabel {
  int offset = 0;
  bool reflected = false;
};

// Partition of V relative to a fixed labeled spine (cycle or path):
//   S    vertices off the spine with >= 2 spine neighbors, split by count,
//   H_i  members of S_2 whose spine neighbors are exactly {v_i, v_{i+1}},
//   R_i  members of H_i with a neighbor in W,
//   W    vertices outside N[spine].
// A vertex with exactly one spine neighbor is impossible under every case
// precondition and raises StructureViolation, as does a two-neighbor vertex
// attached to a non-consecutive pair, or a non-complete H_i.
struct Anatomy {
  std::vector<Vertex> order;  // v_1..v_m as order[0..m-1]
  bool cycle = false;
  VertexSet spine;
  VertexSet S;
  std::map<int, VertexSet> S_by_count;  // i -> S_i
  std::map<int, VertexSet> H;           // slot (1-based) -> H_i
  std::map<int, VertexSet> R;           // slot -> R_i
  VertexSet W;

  Vertex v(int i) const { return order[i - 1]; }  // 1-based spine access
  int m() const { return static_cast<int>(order.size()); }
  const VertexSet& h(int slot) const;
  const VertexSet& r(int slot) const;
};

Anatomy cycle_anatomy(const Graph& g, const InducedWitness& c, SpineLabel label,
                      bool expect_w_independent);

// direction=true reverses the path. Additionally asserts R_1 = R_{m-1} = 0.
Anatomy path_anatomy(const Graph& g, const InducedWitness& p, bool reversed);

enum class ZScheme { Clawp8, P8C, P6P7 };

// Case-specific refinement of W. Components and their universal vertices are
// taken over: Clawp8 -> G[Z_A], P8C -> G[Z_3 u Z_4], P6P7 -> G[Z_3]. Every
// structural fact the construction consumes is re-checked here.
struct ZPartition {
  VertexSet Z;                                       // W-vertices with an R-neighbor
  std::map<int, VertexSet> Z_single;                 // i -> Z_i
  std::map<std::pair<int, int>, VertexSet> Z_pair;   // (i,j) -> Z_ij
  VertexSet Y;
  VertexSet Y3, Y4;   // P8C / P6P7 split of Y
  VertexSet ZA;       // Clawp8: Z-vertices with no Y-neighbor
  std::vector<VertexSet> components;
  std::vector<Vertex> universal;  // one verified universal vertex per component
};

ZPartition z_partition(const Graph& g, const Anatomy& a, ZScheme scheme);

}  // namespace clawdom

#endif  // CLAWDOM_ANATOMY_HPP
