#include "clawdom/gen.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "clawdom/detect.hpp"
#include "clawdom/driver.hpp"
#include "clawdom/exact.hpp"

namespace clawdom {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int k) { return k <= 1 ? 0 : static_cast<int>(eng() % k); }
  int in(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
  bool chance(int num, int den) { return below(den) < num; }
};

void add_clique(EdgeList& edges, const std::vector<Vertex>& members) {
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      edges.emplace_back(members[i], members[j]);
}

Graph line_graph_of(const Graph& base) {
  auto base_edges = base.edges();
  int n = static_cast<int>(base_edges.size());
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto [a, b] = base_edges[i];
      auto [c, d] = base_edges[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  return build_graph(n, edges);
}

bool is_connected(const Graph& g) {
  return g.n() == 0 || connected_components(g).size() == 1;
}

bool is_irreducible(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) <= 1) return false;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      if (g.closed_nb(u) == g.closed_nb(v)) return false;
    }
  return true;
}

struct FamilySpec {
  std::vector<int> forbidden_cycles;  // C_k that must be absent
  int forbidden_path = 8;             // P_k that must be absent (8 always)
  int required_cycle = 0;             // spine presence
  int required_path = 0;
  bool require_irreducible = false;
};

bool verify_instance(const Graph& g, const FamilySpec& spec) {
  if (!is_connected(g)) return false;
  if (find_claw(g)) return false;
  if (find_induced_path(g, spec.forbidden_path)) return false;
  for (int k : spec.forbidden_cycles)
    if (find_induced_cycle(g, k)) return false;
  if (spec.required_cycle && !find_induced_cycle(g, spec.required_cycle))
    return false;
  if (spec.required_path && !find_induced_path(g, spec.required_path))
    return false;
  if (spec.require_irreducible && !is_irreducible(g)) return false;
  return true;
}

// ---- family builders ----------------------------------------------------

// C4 with q pendant W vertices behind an H_1 clique; gamma = q + 1 through
// the reduction rules. q = 0 builds an irreducible decorated C4 instead.
Graph build_c4p6(int n, int q, Rng& rng, std::string& branch) {
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  int next = 4;
  if (q >= 1) {
    branch = "";  // solved by the reductions
    std::vector<Vertex> h1;
    for (int i = 0; i < q; ++i) {
      Vertex r = next++;
      h1.push_back(r);
      edges.emplace_back(r, 0);
      edges.emplace_back(r, 1);
      Vertex w = next++;
      edges.emplace_back(w, r);
    }
    while (next < n) {  // extra clique members without pendants
      Vertex r = next++;
      h1.push_back(r);
      edges.emplace_back(r, 0);
      edges.emplace_back(r, 1);
    }
    add_clique(edges, h1);
    return build_graph(next, edges);
  }
  // Irreducible, W empty: H_1 clique plus a clique of full-C4 vertices with
  // nested H_1 attachments so that no two vertices are twins.
  branch = "C4";
  int p = std::max(1, (n - 4) / 2);
  std::vector<Vertex> h1, d;
  for (int i = 0; i < p; ++i) h1.push_back(next++);
  for (int i = 0; i < p; ++i) d.push_back(next++);
  add_clique(edges, h1);
  add_clique(edges, d);
  for (Vertex h : h1) {
    edges.emplace_back(h, 0);
    edges.emplace_back(h, 1);
  }
  for (int i = 0; i < p; ++i) {
    for (int c = 0; c < 4; ++c) edges.emplace_back(d[i], c);
    for (int j = 0; j <= i; ++j) edges.emplace_back(d[i], h1[j]);
  }
  (void)rng;
  return build_graph(next, edges);
}

// C6 with opposite-pair cliques A on {v1,v2} and B on {v4,v5}; each W vertex
// has one private neighbor on each side. gamma = q + 2.
Graph build_c6p8(int n, int q, Rng& rng, std::string& branch) {
  branch = "C6";
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  int next = 6;
  std::vector<Vertex> a, b;
  for (int i = 0; i < q; ++i) {
    a.push_back(next++);
    b.push_back(next++);
  }
  std::vector<Vertex> w;
  for (int i = 0; i < q; ++i) w.push_back(next++);
  bool extra_a = next < n && rng.chance(1, 2);
  if (extra_a) a.push_back(next++);
  if (next < n) b.push_back(next++);
  add_clique(edges, a);
  add_clique(edges, b);
  for (Vertex x : a) {
    edges.emplace_back(x, 0);
    edges.emplace_back(x, 1);
  }
  for (Vertex x : b) {
    edges.emplace_back(x, 3);
    edges.emplace_back(x, 4);
  }
  for (int i = 0; i < q; ++i) {
    edges.emplace_back(w[i], a[i]);
    edges.emplace_back(w[i], b[i]);
  }
  return build_graph(next, edges);
}

// C5 with R_1 on {v1,v2}, R_3 on {v3,v4}, per-W mate edges.
Graph build_c5p8_z13(int n, int q, Rng& rng, std::string& branch) {
  branch = "C5/Z13";
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  int next = 5;
  std::vector<Vertex> r1, r3, w;
  for (int i = 0; i < q; ++i) {
    r1.push_back(next++);
    r3.push_back(next++);
    w.push_back(next++);
  }
  if (next < n && rng.chance(1, 2)) r1.push_back(next++);  // extra H_1 member
  if (next < n && rng.chance(1, 2)) r3.push_back(next++);
  std::vector<Vertex> s5;
  if (next < n) s5.push_back(next++);  // vertex adjacent to the whole cycle
  add_clique(edges, r1);
  add_clique(edges, r3);
  for (Vertex x : r1) {
    edges.emplace_back(x, 0);
    edges.emplace_back(x, 1);
  }
  for (Vertex x : r3) {
    edges.emplace_back(x, 2);
    edges.emplace_back(x, 3);
  }
  for (int i = 0; i < q; ++i) {
    edges.emplace_back(w[i], r1[i]);
    edges.emplace_back(w[i], r3[i]);
    edges.emplace_back(r1[i], r3[i]);  // mates must be adjacent
  }
  for (Vertex u : s5)
    for (int c = 0; c < 5; ++c) edges.emplace_back(u, c);
  return build_graph(next, edges);
}

// C5 with a single attachment slot: Z_A components (complete-R or split-R)
// and optionally a Y gadget.
Graph build_c5p8_za(int n, int q, Rng& rng, std::string& branch) {
  branch = "C5/Zsingle";
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  int next = 5;
  std::vector<Vertex> h1;
  auto new_r = [&]() {
    Vertex r = next++;
    h1.push_back(r);
    edges.emplace_back(r, 0);
    edges.emplace_back(r, 1);
    return r;
  };
  int comps = std::max(1, q);
  bool want_y = rng.chance(1, 2);
  for (int c = 0; c < comps && next + 3 <= n; ++c) {
    if (rng.chance(1, 2)) {
      // case a: one R vertex complete to the component
      Vertex r = new_r();
      Vertex z1 = next++, z2 = next++;
      edges.emplace_back(z1, z2);
      edges.emplace_back(r, z1);
      edges.emplace_back(r, z2);
    } else {
      // case b: the two component vertices attach to different R vertices
      Vertex ra = new_r(), rb = new_r();
      Vertex z1 = next++, z2 = next++;
      edges.emplace_back(z1, z2);
      edges.emplace_back(ra, z1);
      edges.emplace_back(rb, z2);
    }
  }
  if (want_y && next + 4 <= n) {
    Vertex ry = new_r(), ry2 = new_r();
    Vertex u1 = next++, u2 = next++, y = next++;
    edges.emplace_back(u1, u2);
    edges.emplace_back(ry, u1);
    edges.emplace_back(ry, u2);
    edges.emplace_back(ry2, u1);  // distinguishes u1 from u2
    edges.emplace_back(y, u1);
    edges.emplace_back(y, u2);
  }
  if (next < n) {  // H_3 padding carries no W neighbor
    Vertex h3 = next++;
    edges.emplace_back(h3, 2);
    edges.emplace_back(h3, 3);
  }
  if (next < n) {
    Vertex u = next++;
    for (int c = 0; c < 5; ++c) edges.emplace_back(u, c);
  }
  add_clique(edges, h1);
  return build_graph(next, edges);
}

void add_path(EdgeList& edges, int m) {
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
}

// Path endpoint supports keep the spine ends out of the leaf rule.
void add_end_supports(EdgeList& edges, int m, int& next) {
  Vertex h1 = next++;
  edges.emplace_back(h1, 0);
  edges.emplace_back(h1, 1);
  Vertex hl = next++;
  edges.emplace_back(hl, m - 2);
  edges.emplace_back(hl, m - 1);
}

// P7 with Z_24: R_2 on {v2,v3}, R_4 on {v4,v5}, per-W adjacent mates.
Graph build_p7p8_z24(int n, int q, Rng& rng, std::string& branch) {
  branch = "P7/Z24";
  EdgeList edges;
  add_path(edges, 7);
  int next = 7;
  add_end_supports(edges, 7, next);
  std::vector<Vertex> r2, r4, w;
  for (int i = 0; i < q; ++i) {
    r2.push_back(next++);
    r4.push_back(next++);
    w.push_back(next++);
  }
  if (next < n && rng.chance(1, 2)) r2.push_back(next++);
  if (next < n && rng.chance(1, 2)) r4.push_back(next++);
  add_clique(edges, r2);
  add_clique(edges, r4);
  for (Vertex x : r2) {
    edges.emplace_back(x, 1);
    edges.emplace_back(x, 2);
  }
  for (Vertex x : r4) {
    edges.emplace_back(x, 3);
    edges.emplace_back(x, 4);
  }
  for (int i = 0; i < q; ++i) {
    edges.emplace_back(w[i], r2[i]);
    edges.emplace_back(w[i], r4[i]);
    edges.emplace_back(r2[i], r4[i]);
  }
  return build_graph(next, edges);
}

// P7 with Z_3 / Y_3 structure on R_3 = {v3,v4}, optionally a Z_4 side and a
// Y_4 gadget; variant picks the sub-branch.
Graph build_p7p8_y3(int n, int variant, Rng& rng, std::string& branch) {
  EdgeList edges;
  add_path(edges, 7);
  int next = 7;
  add_end_supports(edges, 7, next);
  std::vector<Vertex> r3, r4;
  auto new_r3 = [&]() {
    Vertex r = next++;
    r3.push_back(r);
    edges.emplace_back(r, 2);
    edges.emplace_back(r, 3);
    return r;
  };
  auto new_r4 = [&]() {
    Vertex r = next++;
    r4.push_back(r);
    edges.emplace_back(r, 3);
    edges.emplace_back(r, 4);
    return r;
  };
  auto component = [&](bool on_r3) {
    Vertex r = on_r3 ? new_r3() : new_r4();
    Vertex z1 = next++, z2 = next++;
    edges.emplace_back(z1, z2);
    edges.emplace_back(r, z1);
    if (rng.chance(1, 2)) {
      edges.emplace_back(r, z2);  // complete attachment
    } else {
      Vertex r2 = on_r3 ? new_r3() : new_r4();
      edges.emplace_back(r2, z2);
    }
  };
  auto y_gadget = [&](bool on_r3) {
    Vertex ry = on_r3 ? new_r3() : new_r4();
    Vertex ry2 = on_r3 ? new_r3() : new_r4();
    Vertex u1 = next++, u2 = next++, y = next++;
    edges.emplace_back(u1, u2);
    edges.emplace_back(ry, u1);
    edges.emplace_back(ry, u2);
    edges.emplace_back(ry2, u1);
    edges.emplace_back(y, u1);
    edges.emplace_back(y, u2);
  };
  switch (variant % 5) {
    case 0: branch = "P7/Z3"; component(true); break;
    case 1: branch = "P7/Y3"; y_gadget(true); break;
    case 2: branch = "P7/Z3Z4"; component(true); component(false); break;
    case 3: branch = "P7/Y3Z4"; y_gadget(true); component(false); break;
    case 4: branch = "P7/Y3Y4"; y_gadget(true); y_gadget(false); break;
  }
  while (next + 2 < n) component(true);
  add_clique(edges, r3);
  add_clique(edges, r4);
  return build_graph(next, edges);
}

Graph build_p6p7_z24(int n, int q, Rng& rng, std::string& branch) {
  branch = "P6/Z24";
  EdgeList edges;
  add_path(edges, 6);
  int next = 6;
  add_end_supports(edges, 6, next);
  std::vector<Vertex> r2, r4, w;
  for (int i = 0; i < q; ++i) {
    r2.push_back(next++);
    r4.push_back(next++);
    w.push_back(next++);
  }
  if (next < n && rng.chance(1, 2)) r2.push_back(next++);
  if (next < n && rng.chance(1, 2)) r4.push_back(next++);
  add_clique(edges, r2);
  add_clique(edges, r4);
  for (Vertex x : r2) {
    edges.emplace_back(x, 1);
    edges.emplace_back(x, 2);
  }
  for (Vertex x : r4) {
    edges.emplace_back(x, 3);
    edges.emplace_back(x, 4);
  }
  for (int i = 0; i < q; ++i) {
    edges.emplace_back(w[i], r2[i]);
    edges.emplace_back(w[i], r4[i]);
    edges.emplace_back(r2[i], r4[i]);
  }
  return build_graph(next, edges);
}

Graph build_p6p7_z3(int n, int variant, Rng& rng, std::string& branch) {
  EdgeList edges;
  add_path(edges, 6);
  int next = 6;
  add_end_supports(edges, 6, next);
  std::vector<Vertex> r3;
  auto new_r3 = [&]() {
    Vertex r = next++;
    r3.push_back(r);
    edges.emplace_back(r, 2);
    edges.emplace_back(r, 3);
    return r;
  };
  auto component = [&]() {
    Vertex r = new_r3();
    Vertex z1 = next++, z2 = next++;
    edges.emplace_back(z1, z2);
    edges.emplace_back(r, z1);
    if (rng.chance(1, 2)) {
      edges.emplace_back(r, z2);
    } else {
      Vertex r2 = new_r3();
      edges.emplace_back(r2, z2);
    }
  };
  if (variant % 2 == 0) {
    branch = "P6/Z3";
    component();
  } else {
    branch = "P6/Y3";
    Vertex ry = new_r3(), ry2 = new_r3();
    Vertex u1 = next++, u2 = next++, y = next++;
    edges.emplace_back(u1, u2);
    edges.emplace_back(ry, u1);
    edges.emplace_back(ry, u2);
    edges.emplace_back(ry2, u1);
    edges.emplace_back(y, u1);
    edges.emplace_back(y, u2);
  }
  while (next + 2 < n) component();
  add_clique(edges, r3);
  return build_graph(next, edges);
}

// Caterpillar tree with a short spine: its line graph has no long paths.
Graph build_caterpillar(int edges_wanted, int spine_edges, Rng& rng) {
  int spine_n = spine_edges + 1;
  EdgeList edges;
  for (int i = 0; i + 1 < spine_n; ++i) edges.emplace_back(i, i + 1);
  int next = spine_n;
  int legs = edges_wanted - spine_edges;
  for (int i = 0; i < legs; ++i)
    edges.emplace_back(rng.below(spine_n), next++);
  return build_graph(next, edges);
}

// Cycle on c <= 8 vertices plus random chords: any line graph of an
// 8-vertex base is P8-free, and the cycle's edges stay an induced C_c.
Graph build_chorded_cycle(int c, int extra_chords, Rng& rng) {
  EdgeList edges;
  for (int i = 0; i < c; ++i) edges.emplace_back(i, (i + 1) % c);
  std::vector<std::pair<Vertex, Vertex>> chords;
  for (int i = 0; i < c; ++i)
    for (int j = i + 2; j < c; ++j)
      if (!(i == 0 && j == c - 1)) chords.emplace_back(i, j);
  for (int i = 0; i < extra_chords && !chords.empty(); ++i) {
    int pick = rng.below(static_cast<int>(chords.size()));
    edges.push_back(chords[pick]);
    chords.erase(chords.begin() + pick);
  }
  return build_graph(c, edges);
}

// q selects the base shape: 5..8 force a chorded cycle of that length (the
// line graph then holds an induced C_q), 1 forces a caterpillar, anything
// else picks by size and randomness.
Graph build_line_graph(int n, int q, Rng& rng, std::string& branch) {
  branch = "";
  if (q >= 5 && q <= 8) {
    branch = "C" + std::to_string(q);
    int chords = std::max(0, std::min(n - q, q * (q - 3) / 2));
    return line_graph_of(build_chorded_cycle(q, chords, rng));
  }
  if (q == 1 || n >= 22) {
    int spine = rng.in(2, 5);
    return line_graph_of(build_caterpillar(std::max(n, spine + 1), spine, rng));
  }
  if (rng.chance(1, 2)) {
    int spine = rng.in(2, 5);
    return line_graph_of(build_caterpillar(std::max(n, spine + 1), spine, rng));
  }
  int c = rng.in(5, 8);
  int chords = std::max(0, std::min(n - c, c * (c - 3) / 2));
  return line_graph_of(build_chorded_cycle(c, chords, rng));
}

Graph build_unit_interval(int n, Rng& rng, std::string& branch) {
  branch = "";
  auto uniform = [&]() {
    return static_cast<double>(rng.eng() >> 11) / 9007199254740992.0;
  };
  double span = 1.1 + 2.0 * uniform();
  std::vector<double> centers(n);
  for (double& c : centers) c = span * uniform();
  std::sort(centers.begin(), centers.end());
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (centers[j] - centers[i] <= 1.0) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "line_graph", "unit_interval", "c4p6",      "c6p8",     "c5p8_z13",
      "c5p8_za",    "p7p8_z24",      "p7p8_y3",   "p6p7_z24", "p6p7_z3"};
  return names;
}

GeneratedInstance gen_family(const std::string& family, int n, int q,
                             std::uint64_t seed) {
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
    Graph g;
    std::string branch;
    FamilySpec spec;
    try {
      if (family == "line_graph") {
        g = build_line_graph(n, q, rng, branch);
        spec = {{}, 8, (q >= 5 && q <= 8) ? q : 0, 0, q >= 5 && q <= 8};
      } else if (family == "unit_interval") {
        g = build_unit_interval(std::max(2, n), rng, branch);
        spec = {{4, 5, 6, 7, 8}, 8, 0, 0, false};
      } else if (family == "c4p6") {
        g = build_c4p6(n, q, rng, branch);
        spec = {{5, 6}, 6, 4, 0, q == 0};
      } else if (family == "c6p8") {
        g = build_c6p8(n, q, rng, branch);
        spec = {{7, 8}, 8, 6, 0, true};
      } else if (family == "c5p8_z13") {
        g = build_c5p8_z13(n, q, rng, branch);
        spec = {{6, 7, 8}, 8, 5, 0, true};
      } else if (family == "c5p8_za") {
        g = build_c5p8_za(n, q, rng, branch);
        spec = {{6, 7, 8}, 8, 5, 0, true};
      } else if (family == "p7p8_z24") {
        g = build_p7p8_z24(n, q, rng, branch);
        spec = {{5, 6, 7, 8}, 8, 0, 7, true};
      } else if (family == "p7p8_y3") {
        g = build_p7p8_y3(n, q, rng, branch);
        spec = {{5, 6, 7, 8}, 8, 0, 7, true};
      } else if (family == "p6p7_z24") {
        g = build_p6p7_z24(n, q, rng, branch);
        spec = {{5, 6, 7}, 7, 0, 6, true};
      } else if (family == "p6p7_z3") {
        g = build_p6p7_z3(n, q, rng, branch);
        spec = {{5, 6, 7}, 7, 0, 6, true};
      } else {
        throw GenError("unknown family: " + family);
      }
    } catch (const GraphError&) {
      continue;  // a pad collided; retry with fresh randomness
    }
    if (!verify_instance(g, spec)) continue;
    InstanceManifest manifest;
    manifest.family = family;
    manifest.n = g.n();
    manifest.q = q;
    manifest.seed = seed;
    manifest.expected_branch = branch;
    manifest.claw_free = !find_claw(g).has_value();
    manifest.p8_free = !find_induced_path(g, 8).has_value();
    return {std::move(g), std::move(manifest)};
  }
  throw GenError("generation exhausted for family " + family + " (n=" +
                 std::to_string(n) + ", q=" + std::to_string(q) + ")");
}

std::string run_bench(const BenchOptions& options) {
  std::ostringstream out;
  for (const std::string& family : options.families)
    for (int size : options.sizes)
      for (int rep = 0; rep < options.per_size; ++rep) {
        std::uint64_t seed = options.seed + static_cast<std::uint64_t>(rep);
        GeneratedInstance inst = gen_family(family, size, 2, seed);
        SolveOptions sopt;
        sopt.small_cutoff = options.small_cutoff;
        auto t0 = std::chrono::steady_clock::now();
        Solution sol = solve(inst.graph, sopt);
        auto t1 = std::chrono::steady_clock::now();
        double solve_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();

        nlohmann::ordered_json row;
        row["family"] = family;
        row["n"] = inst.graph.n();
        row["seed"] = seed;
        row["solve_ms"] = solve_ms;
        row["gamma"] = sol.gamma;
        row["branch"] = sol.branch_trace.empty() ? "" : sol.branch_trace.front();
        if (inst.graph.n() <= options.oracle_cutoff) {
          auto t2 = std::chrono::steady_clock::now();
          VertexSet exact = mds_exact(inst.graph);
          auto t3 = std::chrono::steady_clock::now();
          row["oracle"] = "ok";
          row["oracle_ms"] =
              std::chrono::duration<double, std::milli>(t3 - t2).count();
          row["match"] = exact.size() == sol.gamma;
        } else {
          row["oracle"] = "skipped";
          row["oracle_ms"] = -1.0;
          row["match"] = true;
        }
        out << row.dump() << "\n";
      }
  return out.str();
}

}  // namespace clawdom
