#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clawdom/exact.hpp"
#include "test_util.hpp"

using namespace clawdom;
using testutil::brute_force_gamma;
using testutil::cycle_graph;
using testutil::path_graph;
using testutil::petersen;
using testutil::random_graph;

TEST_CASE("bounded search on C8") {
  Graph c8 = cycle_graph(8);
  // Enumeration over all <=3-subsets: gamma(C8) = 3.
  CHECK(brute_force_gamma(c8) == 3);
  auto r3 = mds_bounded(c8, 3);
  REQUIRE(r3.has_value());
  CHECK(r3->size() == 3);
  CHECK(is_dominating(c8, *r3));
  CHECK(!mds_bounded(c8, 2).has_value());
}

TEST_CASE("single vertex") {
  Graph k1 = build_graph(1, {});
  auto r = mds_bounded(k1, 1);
  REQUIRE(r.has_value());
  CHECK(*r == VertexSet{0});
  CHECK(mds_exact(k1) == VertexSet{0});
}

TEST_CASE("named exact values") {
  CHECK(mds_exact(path_graph(4)).size() == 2);
  CHECK(brute_force_gamma(petersen()) == 3);
  CHECK(mds_exact(petersen()).size() == 3);
  CHECK(mds_exact(build_graph(0, {})).empty());
}

TEST_CASE("optimality against the subset oracle") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, 15 + static_cast<int>(rng() % 60), rng);
    VertexSet got = mds_exact(g);
    CHECK(is_dominating(g, got));
    CHECK(got.size() == brute_force_gamma(g));
  }
}

TEST_CASE("absence is monotone in the cap") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, 30, rng);
    for (int cap = 2; cap <= 4; ++cap)
      if (!mds_bounded(g, cap)) CHECK(!mds_bounded(g, cap - 1));
  }
}

TEST_CASE("deterministic output") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    Graph g = random_graph(10, 40, rng);
    CHECK(mds_exact(g) == mds_exact(g));
  }
}
