#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clawdom/construct.hpp"
#include "clawdom/errors.hpp"
#include "clawdom/exact.hpp"
#include "clawdom/gen.hpp"
#include "test_util.hpp"

using namespace clawdom;
using testutil::brute_force_gamma;
using testutil::cycle_graph;
using testutil::path_graph;

namespace {

InducedWitness first_cycle(const Graph& g, int k) {
  auto w = find_induced_cycle(g, k);
  REQUIRE(w.has_value());
  return *w;
}

InducedWitness first_path(const Graph& g, int k) {
  auto w = find_induced_path(g, k);
  REQUIRE(w.has_value());
  return *w;
}

}  // namespace

TEST_CASE("complete_base tiers") {
  Graph p4 = path_graph(4);
  CompletionSpec spec;
  spec.fallback = VertexSet{1, 3};
  auto [dom, how] = complete_base(p4, VertexSet{1, 3}, spec);
  CHECK(how == Completion::None);
  CHECK(dom == VertexSet{1, 3});

  // base {0} leaves 2,3 undominated; a singleton pool can finish it.
  CompletionSpec single;
  single.singles.push_back(VertexSet{2, 3});
  single.fallback = VertexSet{1, 2, 3};
  auto [dom2, how2] = complete_base(p4, VertexSet{0}, single);
  CHECK(how2 == Completion::Singleton);
  CHECK(dom2 == VertexSet{0, 2});

  // No pools at all: the fallback closes it.
  CompletionSpec fb;
  fb.fallback = VertexSet{2};
  auto [dom3, how3] = complete_base(p4, VertexSet{0}, fb);
  CHECK(how3 == Completion::Fallback);
  CHECK(dom3 == VertexSet{0, 2});

  // A fallback that cannot dominate is a structural failure.
  CompletionSpec bad;
  bad.fallback = VertexSet{0};
  CHECK_THROWS_AS(complete_base(p4, VertexSet{1}, bad), StructureViolation);
}

TEST_CASE("cycle dominates all") {
  Graph c8 = cycle_graph(8);
  BranchResult br = solve_cycle_dominates_all(c8, first_cycle(c8, 8));
  CHECK(br.set.size() == 3);
  CHECK(br.branch == "C8");

  // An extra vertex hanging off two cycle vertices keeps N[C] = V.
  Graph c8x = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                              {6, 7}, {7, 0}, {8, 0}, {8, 1}});
  BranchResult brx = solve_cycle_dominates_all(c8x, first_cycle(c8x, 8));
  CHECK(brx.set.size() == brute_force_gamma(c8x));

  // A vertex outside N[C] is a violation.
  Graph far = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                               {6, 7}, {7, 0}, {8, 0}, {8, 1}, {9, 8}});
  CHECK_THROWS_AS(solve_cycle_dominates_all(far, first_cycle(far, 8)),
                  StructureViolation);
}

TEST_CASE("bare small spines") {
  Graph c4 = cycle_graph(4);
  CHECK(solve_c4_p6(c4, first_cycle(c4, 4)).set.size() == 2);

  Graph c6 = cycle_graph(6);
  CHECK(solve_c6_p8(c6, first_cycle(c6, 6)).set.size() == 2);

  Graph c5 = cycle_graph(5);
  CHECK(solve_c5_p8(c5, first_cycle(c5, 5)).set.size() == 2);
  CHECK(solve_c5_p7_small(c5, first_cycle(c5, 5)).set.size() == 2);

  Graph p7 = path_graph(7);
  CHECK(solve_p7_p8(p7, first_path(p7, 7)).set.size() == 3);

  Graph p6 = path_graph(6);
  CHECK(solve_p6_p7(p6, first_path(p6, 6)).set.size() == 2);
}

TEST_CASE("c6p8 family formula: gamma = q + 2") {
  for (int q = 2; q <= 6; ++q) {
    GeneratedInstance inst = gen_family("c6p8", 6 + 3 * q, q, 7000 + q);
    const Graph& g = inst.graph;
    BranchResult br = solve_c6_p8(g, first_cycle(g, 6));
    CHECK(br.set.size() == q + 2);
    CHECK(is_dominating(g, br.set));
    if (g.n() <= 16) CHECK(brute_force_gamma(g) == q + 2);
  }
}

TEST_CASE("c4p6 construction on the pendant family") {
  for (int q = 2; q <= 4; ++q) {
    GeneratedInstance inst = gen_family("c4p6", 4 + 2 * q, q, 100 + q);
    const Graph& g = inst.graph;
    // Direct case call: the rule-based construction returns q+1 vertices.
    BranchResult br = solve_c4_p6(g, first_cycle(g, 4));
    CHECK(br.set.size() == q + 1);
    CHECK(is_dominating(g, br.set));
    CHECK(brute_force_gamma(g) == q + 1);
  }
}

TEST_CASE("constructions match the oracle on generated members") {
  struct Case {
    const char* family;
    int n, q;
  };
  const Case cases[] = {
      {"c5p8_z13", 13, 2}, {"c5p8_z13", 16, 3}, {"c5p8_za", 14, 1},
      {"c5p8_za", 16, 2},  {"p7p8_z24", 15, 2}, {"p7p8_z24", 12, 1},
      {"p7p8_y3", 14, 0},  {"p7p8_y3", 15, 1},  {"p7p8_y3", 16, 2},
      {"p7p8_y3", 16, 3},  {"p7p8_y3", 17, 4},  {"p6p7_z24", 14, 2},
      {"p6p7_z3", 13, 0},  {"p6p7_z3", 14, 1},  {"c6p8", 14, 2},
      {"c4p6", 12, 0},
  };
  for (const Case& c : cases) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      GeneratedInstance inst = gen_family(c.family, c.n, c.q, seed * 31);
      const Graph& g = inst.graph;
      BranchResult br = [&]() {
        std::string f = c.family;
        if (f == "c5p8_z13" || f == "c5p8_za")
          return solve_c5_p8(g, first_cycle(g, 5));
        if (f == "p7p8_z24" || f == "p7p8_y3")
          return solve_p7_p8(g, first_path(g, 7));
        if (f == "p6p7_z24" || f == "p6p7_z3")
          return solve_p6_p7(g, first_path(g, 6));
        if (f == "c6p8") return solve_c6_p8(g, first_cycle(g, 6));
        return solve_c4_p6(g, first_cycle(g, 4));
      }();
      CHECK(is_dominating(g, br.set));
      if (g.n() <= 17) {
        INFO(c.family, " n=", g.n(), " seed=", seed * 31, " branch=", br.branch);
        CHECK(br.set.size() == brute_force_gamma(g));
      }
    }
  }
}

TEST_CASE("branch labels match the intended sub-case") {
  GeneratedInstance z13 = gen_family("c5p8_z13", 13, 2, 5);
  BranchResult br = solve_c5_p8(z13.graph, first_cycle(z13.graph, 5));
  CHECK(br.branch == "C5/Z13");

  GeneratedInstance za = gen_family("c5p8_za", 14, 1, 5);
  BranchResult br2 = solve_c5_p8(za.graph, first_cycle(za.graph, 5));
  CHECK(br2.branch.substr(0, 10) == "C5/Zsingle");
}
