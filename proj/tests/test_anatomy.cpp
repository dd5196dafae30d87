#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clawdom/anatomy.hpp"
#include "clawdom/errors.hpp"
#include "test_util.hpp"

using namespace clawdom;
using testutil::cycle_graph;
using testutil::path_graph;

namespace {

InducedWitness cycle_witness(int k) {
  InducedWitness w;
  w.kind = WitnessKind::Cycle;
  for (int i = 0; i < k; ++i) w.vertices.push_back(i);
  return w;
}

InducedWitness path_witness(int k) {
  InducedWitness w;
  w.kind = WitnessKind::Path;
  for (int i = 0; i < k; ++i) w.vertices.push_back(i);
  return w;
}

}  // namespace

TEST_CASE("bare C6 anatomy is empty") {
  Graph c6 = cycle_graph(6);
  Anatomy a = cycle_anatomy(c6, cycle_witness(6), {}, true);
  CHECK(a.S.empty());
  CHECK(a.W.empty());
  CHECK(a.H.empty());
}

TEST_CASE("C4 with an attached pair and a W vertex") {
  // x adjacent to {v1,v2}, w adjacent only to x.
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1},
                            {5, 4}});
  Anatomy a = cycle_anatomy(g, cycle_witness(4), {}, true);
  CHECK(a.h(1) == VertexSet{4});
  CHECK(a.r(1) == VertexSet{4});
  CHECK(a.W == VertexSet{5});
  CHECK(a.S == VertexSet{4});
}

TEST_CASE("single spine attachment violates") {
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}});
  CHECK_THROWS_AS(cycle_anatomy(g, cycle_witness(5), {}, false),
                  StructureViolation);
}

TEST_CASE("rotation relabels the spine") {
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 2}, {4, 3},
                            {5, 4}});
  Anatomy rot = cycle_anatomy(g, cycle_witness(4), {2, false}, true);
  CHECK(rot.v(1) == 2);
  CHECK(rot.h(1) == VertexSet{4});  // {v3,v4} became {v1,v2}
}

TEST_CASE("bare P6 anatomy is empty") {
  Graph p6 = path_graph(6);
  Anatomy a = path_anatomy(p6, path_witness(6), false);
  CHECK(a.S.empty());
  CHECK(a.W.empty());
}

TEST_CASE("P7 with an interior attachment") {
  // a adjacent to {v2,v3}; w adjacent to a.
  Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                            {7, 1}, {7, 2}, {8, 7}});
  Anatomy a = path_anatomy(g, path_witness(7), false);
  CHECK(a.h(2) == VertexSet{7});
  CHECK(a.r(2) == VertexSet{7});
  CHECK(a.W == VertexSet{8});
}

TEST_CASE("attachment behind the first slot violates on a path") {
  // b adjacent to {v1,v2}; w adjacent to b: R_1 must be empty.
  Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                            {7, 0}, {7, 1}, {8, 7}});
  CHECK_THROWS_AS(path_anatomy(g, path_witness(7), false), StructureViolation);
}

TEST_CASE("path reversal flips slots") {
  Graph g = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 1},
                            {6, 2}, {7, 6}});
  Anatomy fwd = path_anatomy(g, path_witness(6), false);
  CHECK(fwd.h(2) == VertexSet{6});
  Anatomy rev = path_anatomy(g, path_witness(6), true);
  CHECK(rev.h(4) == VertexSet{6});
}

TEST_CASE("z_partition with empty W") {
  Graph p7ext = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                {7, 0}, {7, 1}, {8, 5}, {8, 6}});
  Anatomy a = path_anatomy(p7ext, path_witness(7), false);
  ZPartition zp = z_partition(p7ext, a, ZScheme::P8C);
  CHECK(zp.Z.empty());
  CHECK(zp.Y.empty());
  CHECK(zp.components.empty());
}

TEST_CASE("z_partition classifies a Z24 vertex") {
  // P6 spine; r2 on {v2,v3}, r4 on {v4,v5}, adjacent mates, one w.
  Graph g = build_graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                             {6, 0}, {6, 1},      // end support H_1
                             {7, 4}, {7, 5},      // end support H_5
                             {8, 1}, {8, 2},      // r2
                             {9, 3}, {9, 4},      // r4
                             {8, 9}, {10, 8}, {10, 9}});
  Anatomy a = path_anatomy(g, path_witness(6), false);
  ZPartition zp = z_partition(g, a, ZScheme::P6P7);
  CHECK(zp.Z_pair.at({2, 4}) == VertexSet{10});
  CHECK(zp.Y.empty());
}

TEST_CASE("z_partition rejects non-adjacent mates") {
  Graph g = build_graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                             {6, 0}, {6, 1},
                             {7, 4}, {7, 5},
                             {8, 1}, {8, 2},
                             {9, 3}, {9, 4},
                             {10, 8}, {10, 9}});  // no 8-9 edge
  Anatomy a = path_anatomy(g, path_witness(6), false);
  CHECK_THROWS_AS(z_partition(g, a, ZScheme::P6P7), StructureViolation);
}

TEST_CASE("clawp8 z_partition on a Z13 instance") {
  Graph g = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 0}, {5, 1},    // r1
                            {6, 2}, {6, 3},    // r3
                            {5, 6},            // mates adjacent
                            {7, 5}, {7, 6}});  // w
  Anatomy a = cycle_anatomy(g, cycle_witness(5), {}, false);
  ZPartition zp = z_partition(g, a, ZScheme::Clawp8);
  CHECK(zp.Z_pair.at({1, 3}) == VertexSet{7});
  CHECK(zp.Y.empty());
}

TEST_CASE("clawp8 z_partition needs canonical rotation") {
  // Attachments on slot 2 only: not canonical until rotated.
  Graph g = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 1}, {5, 2}, {6, 1}, {6, 2}, {5, 6},
                            {7, 5}, {7, 6}});
  Anatomy identity = cycle_anatomy(g, cycle_witness(5), {}, false);
  CHECK_THROWS_AS(z_partition(g, identity, ZScheme::Clawp8),
                  StructureViolation);
  Anatomy rotated = cycle_anatomy(g, cycle_witness(5), {1, false}, false);
  ZPartition zp = z_partition(g, rotated, ZScheme::Clawp8);
  CHECK(zp.Z_single.at(1) == VertexSet{7});
  CHECK(zp.ZA == VertexSet{7});
  REQUIRE(zp.components.size() == 1);
  CHECK(zp.universal[0] == 7);
}
