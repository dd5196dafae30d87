// Acceptance suite: one pass/fail line per criterion. An optional argument
// runs a single criterion (1..8).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clawdom/chordal.hpp"
#include "clawdom/driver.hpp"
#include "clawdom/exact.hpp"
#include "clawdom/gen.hpp"
#include "test_util.hpp"

using namespace clawdom;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct CorpusEntry {
  GeneratedInstance inst;
  Solution sol;
  int exact_gamma = -1;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  double build_seconds = 0;
  int violations = 0;
};

// Member instances spanning every family, solved with the structural
// dispatch (small_cutoff 0 so every kernel reaches its case) and
// oracle-checked once. At least 500 land in the 4..18 range.
const Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    auto t0 = std::chrono::steady_clock::now();
    struct Block {
      const char* family;
      int n, q, count;
    };
    const Block blocks[] = {
        {"line_graph", 12, 8, 25},   // chorded C8 bases
        {"line_graph", 11, 7, 25},   // chorded C7 bases
        {"c6p8", 13, 2, 15},         {"c6p8", 16, 3, 15},
        {"c5p8_z13", 13, 2, 15},     {"c5p8_z13", 16, 3, 15},
        {"c5p8_za", 14, 1, 15},      {"c5p8_za", 17, 2, 15},
        {"p7p8_z24", 12, 1, 10},     {"p7p8_z24", 15, 2, 10},
        {"p7p8_z24", 18, 3, 10},     {"p7p8_y3", 13, 0, 8},
        {"p7p8_y3", 15, 1, 8},       {"p7p8_y3", 17, 2, 8},
        {"p7p8_y3", 17, 3, 8},       {"p7p8_y3", 18, 4, 8},
        {"p6p7_z24", 14, 2, 15},     {"p6p7_z24", 17, 3, 15},
        {"p6p7_z3", 12, 0, 15},      {"p6p7_z3", 14, 1, 15},
        {"c4p6", 12, 0, 15},         {"c4p6", 16, 0, 15},
        {"c4p6", 10, 3, 10},         {"c4p6", 14, 5, 10},
        {"unit_interval", 9, 0, 25}, {"unit_interval", 12, 0, 25},
        {"unit_interval", 15, 0, 35},
        {"line_graph", 10, 1, 20},   // caterpillar bases
        {"line_graph", 14, 1, 20},   {"line_graph", 12, 0, 20},
        {"line_graph", 16, 0, 20},   {"line_graph", 13, 6, 15},
        {"line_graph", 10, 5, 13},
    };
    SolveOptions opts;
    opts.small_cutoff = 0;
    std::uint64_t seed = 1000;
    for (const Block& b : blocks)
      for (int i = 0; i < b.count; ++i) {
        CorpusEntry e{gen_family(b.family, b.n, b.q, ++seed), {}, -1};
        try {
          e.sol = solve(e.inst.graph, opts);
        } catch (const StructureViolation& ex) {
          std::fprintf(stderr, "StructureViolation on %s seed %llu: %s\n",
                       b.family, static_cast<unsigned long long>(seed),
                       ex.what());
          ++out.violations;
          continue;
        }
        e.exact_gamma = mds_exact(e.inst.graph).size();
        out.entries.push_back(std::move(e));
      }
    out.build_seconds = seconds_since(t0);
    return out;
  }();
  return c;
}

bool criterion1() {
  const Corpus& c = corpus();
  int total = 0, matched = 0;
  for (const CorpusEntry& e : c.entries) {
    if (e.inst.graph.n() < 4 || e.inst.graph.n() > 18) continue;
    ++total;
    if (e.sol.gamma == e.exact_gamma) ++matched;
  }
  bool pass = total >= 500 && matched == total && c.violations == 0 &&
              c.build_seconds < 300.0;
  std::printf(
      "[%s] criterion 1: oracle equivalence on %d/%d generated members "
      "(>=500 required), %.1fs\n",
      pass ? "PASS" : "FAIL", matched, total, c.build_seconds);
  return pass;
}

bool criterion2() {
  const Corpus& c = corpus();
  std::map<std::string, int> bucket_counts;
  auto bucket_of = [](const std::string& branch) -> std::string {
    auto pre = [&](const char* p) {
      return branch.rfind(p, 0) == 0;
    };
    if (pre("C8")) return "C8";
    if (pre("C7")) return "C7";
    if (pre("C6")) return "C6";
    if (pre("C5/Z13")) return "C5/Z13";
    if (pre("C5/Zsingle")) return "C5/Zsingle";
    if (pre("P7/Z24")) return "P7/Z24";
    if (pre("P7/Y") || pre("P7/Z3")) return "P7/Y-branches";
    if (pre("P6/Z24")) return "P6/Z24";
    if (pre("P6/Z3") || pre("P6/Y3")) return "P6/Z3";
    if (pre("C4")) return "C4";
    if (pre("chordal")) return "chordal";
    return "";
  };
  bool all_matched = true;
  for (const CorpusEntry& e : c.entries)
    for (const std::string& entry : e.sol.branch_trace) {
      auto colon = entry.find(':');
      if (colon == std::string::npos) continue;
      std::string b = bucket_of(entry.substr(colon + 1));
      if (b.empty()) continue;
      ++bucket_counts[b];
      if (e.sol.gamma != e.exact_gamma) all_matched = false;
    }
  const char* required[] = {"C8",     "C7",         "C6",     "C5/Z13",
                            "C5/Zsingle", "P7/Z24", "P7/Y-branches",
                            "P6/Z24", "P6/Z3",      "C4",     "chordal"};
  bool pass = c.violations == 0 && all_matched;
  std::string detail;
  for (const char* r : required) {
    int n = bucket_counts[r];
    detail += std::string(r) + "=" + std::to_string(n) + " ";
    if (n < 20) pass = false;
  }
  std::printf("[%s] criterion 2: branch coverage (>=20 each, 0 violations): %s\n",
              pass ? "PASS" : "FAIL", detail.c_str());
  return pass;
}

bool criterion3() {
  bool pass = true;
  for (int q = 2; q <= 6; ++q) {
    GeneratedInstance a = gen_family("c4p6", 4 + 2 * q, q, 300 + q);
    if (solve(a.graph).gamma != q + 1) pass = false;
    GeneratedInstance b = gen_family("c6p8", 6 + 3 * q, q, 400 + q);
    if (solve(b.graph).gamma != q + 2) pass = false;
  }
  std::printf(
      "[%s] criterion 3: closed-form sizes, c4p6 gamma=q+1 and c6p8 "
      "gamma=q+2 for q=2..6\n",
      pass ? "PASS" : "FAIL");
  return pass;
}

bool criterion4() {
  std::mt19937_64 rng(4444);
  int tested = 0;
  bool pass = true;
  while (tested < 200) {
    Graph g = tested % 2 == 0
                  ? testutil::random_tree_line_graph(
                        5 + static_cast<int>(rng() % 8), rng)
                  : gen_family("unit_interval", 6 + rng() % 8, 0, rng()).graph;
    if (g.n() < 3 || g.n() > 14) continue;
    if (find_claw(g)) continue;

    // One twin pair if present: gamma is preserved by deleting one twin.
    bool used = false;
    for (Vertex u = 0; u < g.n() && !used; ++u)
      for (Vertex v : g.neighbors(u)) {
        if (v <= u) continue;
        if (g.closed_nb(u) == g.closed_nb(v)) {
          VertexSet keep = g.vertices();
          keep.erase(v);
          auto [del, map] = induced_subgraph(g, keep);
          if (testutil::brute_force_gamma(g) != testutil::brute_force_gamma(del))
            pass = false;
          used = true;
          break;
        }
      }
    if (!used) {
      for (Vertex u = 0; u < g.n(); ++u) {
        if (g.degree(u) != 1) continue;
        Vertex support = g.neighbors(u)[0];
        auto [del, map] =
            induced_subgraph(g, g.vertices().minus(g.closed_nb(support)));
        int sum = 1;
        for (const auto& comp : connected_components(del)) {
          auto [cg, cmap] = induced_subgraph(del, comp);
          sum += testutil::brute_force_gamma(cg);
        }
        if (testutil::brute_force_gamma(g) != sum) pass = false;
        used = true;
        break;
      }
    }
    if (used) ++tested;
  }
  std::printf(
      "[%s] criterion 4: twin/leaf gamma preservation on %d claw-free "
      "graphs (oracle both sides)\n",
      pass ? "PASS" : "FAIL", tested);
  return pass;
}

bool criterion5() {
  bool pass = true;
  long long graphs = 0;
  auto check = [&](const Graph& g) {
    if (find_claw(g).has_value() != testutil::bf_has_claw(g)) pass = false;
    for (int k = 2; k <= std::min(8, g.n()); ++k) {
      if (find_induced_path(g, k).has_value() !=
          testutil::bf_has_induced_path(g, k))
        pass = false;
      if (k >= 4 && find_induced_cycle(g, k).has_value() !=
                        testutil::bf_has_induced_cycle(g, k))
        pass = false;
    }
    ++graphs;
  };
  // All graphs on n <= 4 exhaustively.
  for (int n = 1; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (mask & (1 << bit)) edges.emplace_back(i, j);
      check(build_graph(n, edges));
    }
  }
  // Documented random sample above n = 4 (exhausting n <= 7 is infeasible
  // in test time; 1000 random graphs on 5..10 vertices instead).
  std::mt19937_64 rng(5555);
  for (int i = 0; i < 1000; ++i) {
    int n = 5 + static_cast<int>(rng() % 6);
    check(testutil::random_graph(n, 10 + static_cast<int>(rng() % 75), rng));
  }
  std::printf(
      "[%s] criterion 5: detector agreement with subset enumeration on %lld "
      "graphs (exhaustive n<=4 plus 1000-graph random sample, n<=10)\n",
      pass ? "PASS" : "FAIL", graphs);
  return pass;
}

bool criterion6() {
  bool pass = true;
  int done = 0;
  for (std::uint64_t seed = 1; done < 200; ++seed) {
    GeneratedInstance inst =
        gen_family("unit_interval", 6 + static_cast<int>(seed % 11), 0, 66000 + seed);
    const Graph& g = inst.graph;
    if (g.n() > 16) continue;
    auto eo = lexbfs_elimination(g);
    if (!eo) {
      pass = false;
      break;
    }
    VertexSet s = solve_chordal_clawfree(g, *eo);
    bool indep = true;
    for (Vertex u : s)
      for (Vertex v : s)
        if (u < v && g.has_edge(u, v)) indep = false;
    if (!indep || !is_dominating(g, s)) pass = false;
    if (s.size() != testutil::brute_force_gamma(g)) pass = false;
    ++done;
  }
  std::printf(
      "[%s] criterion 6: chordal base independent+dominating+optimal on %d "
      "claw-free chordal instances\n",
      pass ? "PASS" : "FAIL", done);
  return pass;
}

bool criterion7() {
  const Corpus& c = corpus();
  int checked = 0;
  bool pass = true;
  for (const CorpusEntry& e : c.entries) {
    if (!is_dominating(e.inst.graph, e.sol.set)) pass = false;
    ++checked;
  }
  // Fallback runs on non-members must certify too.
  std::mt19937_64 rng(7777);
  SolveOptions opts;
  opts.fallback_exact = true;
  for (int i = 0; i < 20; ++i) {
    Graph g = testutil::random_graph(8 + static_cast<int>(rng() % 5), 30, rng);
    Solution sol = solve(g, opts);
    if (!is_dominating(g, sol.set)) pass = false;
    ++checked;
  }
  std::printf(
      "[%s] criterion 7: certification, %d returned sets all dominating "
      "(including fallback runs)\n",
      pass ? "PASS" : "FAIL", checked);
  return pass;
}

bool criterion8() {
  BenchOptions opts;
  opts.families = {"line_graph"};
  opts.sizes = {40, 60, 80, 100};
  opts.per_size = 10;
  opts.seed = 88000;
  opts.oracle_cutoff = 18;
  auto t0 = std::chrono::steady_clock::now();
  std::string report = run_bench(opts);
  double total = seconds_since(t0);
  int rows = 0, skipped = 0;
  bool pass = true;
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    auto pos = line.find("\"solve_ms\":");
    double ms = std::stod(line.substr(pos + 11));
    if (ms >= 10000.0) pass = false;
    if (line.find("\"oracle\":\"skipped\"") != std::string::npos) ++skipped;
  }
  if (rows != 40 || skipped != 40) pass = false;
  std::printf(
      "[%s] criterion 8: 40 line-graph instances n in {40,60,80,100} solved "
      "(max size well under 10s, %.1fs total), oracle column skipped on all\n",
      pass ? "PASS" : "FAIL", total);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
  int fails = 0;
  if (argc > 1) {
    int which = std::atoi(argv[1]);
    if (which < 1 || which > 8) {
      std::fprintf(stderr, "usage: acceptance [1..8]\n");
      return 2;
    }
    if (!criteria[which - 1]()) ++fails;
  } else {
    for (auto* c : criteria)
      if (!c()) ++fails;
  }
  return fails == 0 ? 0 : 1;
}
