#include "clawdom/construct.hpp"

#include <algorithm>
#include <cassert>

#include "clawdom/errors.hpp"
#include "clawdom/exact.hpp"

namespace clawdom {

const char* completion_name(Completion c) {
  switch (c) {
    case Completion::None: return "none";
    case Completion::Singleton: return "singleton";
    case Completion::Pair: return "pair";
    case Completion::Triple: return "triple";
    case Completion::Fallback: return "fallback";
  }
  return "?";
}

namespace {

VertexSet open_nb(const Graph& g, Vertex v) { return VertexSet(g.neighbors(v)); }

VertexSet undominated_after(const Graph& g, const VertexSet& s) {
  return g.vertices().minus(closed_neighborhood(g, s));
}

bool covered_by(const Graph& g, const VertexSet& u, Vertex a) {
  for (Vertex x : u)
    if (x != a && !g.has_edge(x, a)) return false;
  return true;
}

bool covered_by2(const Graph& g, const VertexSet& u, Vertex a, Vertex b) {
  for (Vertex x : u) {
    if (x == a || x == b) continue;
    if (!g.has_edge(x, a) && !g.has_edge(x, b)) return false;
  }
  return true;
}

bool covered_by3(const Graph& g, const VertexSet& u, Vertex a, Vertex b,
                 Vertex c) {
  for (Vertex x : u) {
    if (x == a || x == b || x == c) continue;
    if (!g.has_edge(x, a) && !g.has_edge(x, b) && !g.has_edge(x, c))
      return false;
  }
  return true;
}

void assert_dominating(const Graph& g, const BranchResult& br) {
  if (!is_dominating(g, br.set))
    throw StructureViolation("branch " + br.branch +
                             " produced a non-dominating set");
}

BranchResult bounded_result(const Graph& g, int cap, std::string branch) {
  auto set = mds_bounded(g, cap);
  if (!set)
    throw StructureViolation("bounded search failed under cap " +
                             std::to_string(cap) + " in branch " + branch);
  BranchResult br{*set, std::move(branch), Completion::None};
  assert_dominating(g, br);
  return br;
}

Vertex min_neighbor_in(const Graph& g, Vertex w, const VertexSet& pool) {
  VertexSet cands = open_nb(g, w).intersect(pool);
  if (cands.empty())
    throw StructureViolation("expected a neighbor in pool", {w});
  return cands.min();
}

// Smallest member of pool complete to target, or -1.
Vertex min_complete_to(const Graph& g, const VertexSet& pool,
                       const VertexSet& target) {
  for (Vertex r : pool) {
    bool ok = true;
    for (Vertex z : target)
      if (z != r && !g.has_edge(r, z)) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  return -1;
}

int component_of(const std::vector<VertexSet>& comps, Vertex v) {
  for (size_t i = 0; i < comps.size(); ++i)
    if (comps[i].contains(v)) return static_cast<int>(i);
  return -1;
}

// One universal vertex of w's component that is adjacent to w.
Vertex universal_neighbor(const Graph& g, const ZPartition& zp, Vertex w) {
  VertexSet nb = open_nb(g, w);
  int ci = -1;
  for (Vertex z : nb) {
    ci = component_of(zp.components, z);
    if (ci >= 0) break;
  }
  if (ci < 0)
    throw StructureViolation("Y vertex without a component neighbor", {w});
  const VertexSet& comp = zp.components[ci];
  for (Vertex u : comp) {
    if (!nb.contains(u)) continue;
    bool uni = true;
    for (Vertex v : comp)
      if (v != u && !g.has_edge(u, v)) {
        uni = false;
        break;
      }
    if (uni) return u;
  }
  throw StructureViolation("Y vertex not adjacent to any universal vertex",
                           {w});
}

}  // namespace

std::pair<VertexSet, Completion> complete_base(const Graph& g,
                                               const VertexSet& base,
                                               const CompletionSpec& spec) {
  VertexSet with_fallback = base.unite(spec.fallback);
  if (!is_dominating(g, with_fallback))
    throw StructureViolation("fallback does not complete the base",
                             spec.fallback.members());
  VertexSet u = undominated_after(g, base);
  if (u.empty()) return {base, Completion::None};

  for (const VertexSet& pool : spec.singles)
    for (Vertex v : pool)
      if (covered_by(g, u, v)) {
        VertexSet out = base;
        out.insert(v);
        return {out, Completion::Singleton};
      }
  for (const auto& [pa, pb] : spec.pairs)
    for (Vertex a : pa)
      for (Vertex b : pb) {
        if (a == b) continue;
        if (covered_by2(g, u, a, b)) {
          VertexSet out = base;
          out.insert(a);
          out.insert(b);
          return {out, Completion::Pair};
        }
      }
  for (const auto& pools : spec.triples)
    for (Vertex a : pools[0])
      for (Vertex b : pools[1]) {
        if (b == a) continue;
        for (Vertex c : pools[2]) {
          if (c == a || c == b) continue;
          if (covered_by3(g, u, a, b, c)) {
            VertexSet out = base;
            out.insert(a);
            out.insert(b);
            out.insert(c);
            return {out, Completion::Triple};
          }
        }
      }
  return {with_fallback, Completion::Fallback};
}

BranchResult solve_cycle_dominates_all(const Graph& g,
                                       const InducedWitness& c) {
  if (!c.verify(g) || c.kind != WitnessKind::Cycle)
    throw StructureViolation("invalid cycle witness");
  VertexSet spine(c.vertices);
  VertexSet outside = g.vertices().minus(closed_neighborhood(g, spine));
  if (!outside.empty())
    throw StructureViolation("vertex outside N[cycle] in the long-cycle case",
                             outside.members());
  return bounded_result(g, c.k(), "C" + std::to_string(c.k()));
}

BranchResult solve_c4_p6(const Graph& g, const InducedWitness& c4) {
  VertexSet spine(c4.vertices);
  VertexSet w = g.vertices().minus(closed_neighborhood(g, spine));
  if (w.size() <= 1)
    return bounded_result(g, 4 + w.size(), "C4/smallW");

  // Some labeling makes every attacher of W a {v1,v2} vertex.
  for (int off = 0; off < 4; ++off)
    for (int refl = 0; refl < 2; ++refl) {
      Anatomy a = cycle_anatomy(g, c4, {off, refl == 1}, true);
      bool ok = true;
      for (Vertex x : w) {
        if (!open_nb(g, x).minus(w).subset_of(a.h(1))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      VertexSet base;
      for (Vertex x : w) base.insert(min_neighbor_in(g, x, a.h(1)));
      auto [set, comp] =
          complete_base(g, base, {{}, {}, {}, VertexSet{a.v(3)}});
      BranchResult br{set, "C4", comp};
      if (comp != Completion::Fallback) br.branch += ";unexpected-completion";
      assert_dominating(g, br);
      return br;
    }
  throw StructureViolation("no C4 labeling with uniform W attachment",
                           w.members());
}

BranchResult solve_c6_p8(const Graph& g, const InducedWitness& c6) {
  VertexSet spine(c6.vertices);
  VertexSet w = g.vertices().minus(closed_neighborhood(g, spine));
  if (w.size() <= 1)
    return bounded_result(g, 6 + w.size(), "C6/smallW");

  for (int off = 0; off < 6; ++off)
    for (int refl = 0; refl < 2; ++refl) {
      Anatomy a = cycle_anatomy(g, c6, {off, refl == 1}, true);
      bool ok = true;
      for (Vertex x : w)
        if (open_nb(g, x).intersect(a.h(1)).empty() ||
            open_nb(g, x).intersect(a.h(4)).empty()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      CompletionSpec spec;
      spec.singles.push_back(g.vertices());  // smaller-than-asserted guard
      spec.fallback = VertexSet{a.v(1), a.v(4)};
      auto [set, comp] = complete_base(g, w, spec);
      BranchResult br{set, "C6", comp};
      if (comp != Completion::Fallback) br.branch += ";unexpected-completion";
      assert_dominating(g, br);
      return br;
    }
  throw StructureViolation("no C6 labeling with opposite-pair W attachment",
                           w.members());
}

namespace {

// Base vertices for the component machinery shared by the path cases and the
// C5 single-slot case: one universal vertex per Y member's component, then for
// each component untouched by Y either a complete R vertex (when allowed) or a
// universal vertex. Returns whether any complete R vertex was used.
bool component_base(const Graph& g, const ZPartition& zp, const VertexSet& y,
                    const std::vector<std::pair<const VertexSet*, const VertexSet*>>& rpools,
                    bool allow_complete_r, VertexSet& base) {
  bool used_complete = false;
  for (Vertex yi : y) base.insert(universal_neighbor(g, zp, yi));
  VertexSet ny;
  for (Vertex yi : y) ny = ny.unite(open_nb(g, yi));
  for (size_t i = 0; i < zp.components.size(); ++i) {
    const VertexSet& comp = zp.components[i];
    if (!comp.intersect(ny).empty()) continue;  // covered via a Y choice
    Vertex pick = -1;
    if (allow_complete_r) {
      for (const auto& [zs, pool] : rpools) {
        if (!comp.subset_of(*zs)) continue;
        pick = min_complete_to(g, *pool, comp);
        break;
      }
    }
    if (pick < 0) pick = zp.universal[i];
    base.insert(pick);
    if (pick >= 0 && !comp.contains(pick)) used_complete = true;
  }
  return used_complete;
}

}  // namespace

BranchResult solve_c5_p8(const Graph& g, const InducedWitness& c5) {
  VertexSet spine(c5.vertices);
  VertexSet w = g.vertices().minus(closed_neighborhood(g, spine));
  if (w.size() <= 1)
    return bounded_result(g, 5 + w.size(), "C5/smallW");

  Anatomy a0 = cycle_anatomy(g, c5, {0, false}, false);
  std::vector<int> support;
  for (const auto& [slot, r] : a0.R)
    if (!r.empty()) support.push_back(slot);
  if (support.empty())
    throw StructureViolation("W nonempty but no R attachments on the C5");

  int offset;
  if (support.size() == 1) {
    offset = support[0] - 1;
  } else if (support.size() == 2) {
    int d = support[1] - support[0];
    if (d == 2)
      offset = support[0] - 1;
    else if (d == 3)
      offset = support[1] - 1;
    else
      throw StructureViolation("adjacent R slots on the C5", support);
  } else {
    throw StructureViolation("three R slots on the C5", support);
  }
  Anatomy a = cycle_anatomy(g, c5, {offset, false}, false);
  ZPartition zp = z_partition(g, a, ZScheme::Clawp8);

  auto it13 = zp.Z_pair.find({1, 3});
  if (it13 != zp.Z_pair.end() && !it13->second.empty()) {
    const VertexSet& z13 = it13->second;
    const auto& zm = z13.members();
    Vertex w1 = zm[0], w1p = zm[1];
    VertexSet base;
    base.insert(min_neighbor_in(g, w1, a.r(1)));
    base.insert(min_neighbor_in(g, w1p, a.r(3)));
    for (size_t i = 2; i < zm.size(); ++i) base.insert(zm[i]);

    CompletionSpec spec;
    VertexSet pool = a.S;
    pool.insert(a.v(5));
    spec.singles.push_back(pool);
    spec.fallback = VertexSet{a.v(2), a.v(5)};
    auto [set, comp] = complete_base(g, base, spec);
    BranchResult br{set, "C5/Z13", comp};
    assert_dominating(g, br);
    return br;
  }

  // Single-slot case: pick per Y member, then per Z_A component.
  VertexSet base;
  for (Vertex y : zp.Y) {
    VertexSet ny = open_nb(g, y);
    VertexSet r1y;
    for (Vertex z : ny) r1y = r1y.unite(open_nb(g, z).intersect(a.r(1)));
    Vertex pick = -1;
    for (Vertex z : ny) {
      bool complete = true;
      for (Vertex r : r1y)
        if (!g.has_edge(z, r)) {
          complete = false;
          break;
        }
      if (complete) {
        pick = z;
        break;
      }
    }
    if (pick < 0) pick = ny.min();
    base.insert(pick);
  }
  bool case_a = false;
  for (size_t i = 0; i < zp.components.size(); ++i) {
    Vertex rc = min_complete_to(g, a.r(1), zp.components[i]);
    if (rc >= 0) {
      base.insert(rc);
      case_a = true;
    } else {
      base.insert(zp.universal[i]);
    }
  }

  CompletionSpec spec;
  if (case_a) {
    spec.singles.push_back(a.spine.unite(a.S));
    spec.fallback = VertexSet{a.v(3), a.v(5)};
  } else {
    auto it5 = a.S_by_count.find(5);
    spec.singles.push_back(it5 == a.S_by_count.end() ? VertexSet{}
                                                     : it5->second);
    VertexSet nc = closed_neighborhood(g, a.spine);
    spec.pairs.emplace_back(nc, nc);
    spec.fallback = VertexSet{a.v(1), a.v(3), a.v(5)};
  }
  auto [set, comp] = complete_base(g, base, spec);
  BranchResult br{set, case_a ? "C5/Zsingle-a" : "C5/Zsingle-b", comp};
  assert_dominating(g, br);
  return br;
}

BranchResult solve_c5_p7_small(const Graph& g, const InducedWitness& c5) {
  VertexSet spine(c5.vertices);
  VertexSet w = g.vertices().minus(closed_neighborhood(g, spine));
  if (w.size() > 1)
    throw StructureViolation("|W| > 1 on a C5 in the P7-free case",
                             w.members());
  return bounded_result(g, 5 + w.size(), "C5/k7smallW");
}

namespace {

struct PathContext {
  Anatomy a;
  ZPartition zp;
};

CompletionSpec end_pair_spec(const Graph& g, const Anatomy& a) {
  CompletionSpec spec;
  spec.pairs.emplace_back(g.closed_nb(a.v(1)), g.closed_nb(a.v(a.m())));
  spec.fallback = VertexSet{a.v(2), a.v(4), a.v(6)};
  return spec;
}

BranchResult p8c_z24_branch(const Graph& g, const PathContext& ctx) {
  const Anatomy& a = ctx.a;
  const ZPartition& zp = ctx.zp;
  const VertexSet& z24 = zp.Z_pair.at({2, 4});

  if (!a.r(3).empty())
    throw StructureViolation("R_3 nonempty alongside Z_24", a.r(3).members());

  std::vector<std::pair<const VertexSet*, const VertexSet*>> rpools;
  auto z4it = zp.Z_single.find(4);
  static const VertexSet empty{};
  const VertexSet& z4 = z4it == zp.Z_single.end() ? empty : z4it->second;

  if (z24.size() >= 2) {
    VertexSet base;
    Vertex w = z24.min();
    base.insert(min_neighbor_in(g, w, a.r(2)));
    for (Vertex other : z24)
      if (other != w) base.insert(min_neighbor_in(g, other, a.r(4)));
    rpools = {};  // universal vertices only in this sub-case
    component_base(g, zp, zp.Y4, rpools, false, base);
    auto [set, comp] = complete_base(g, base, end_pair_spec(g, a));
    BranchResult br{set, "P7/Z24ge2", comp};
    assert_dominating(g, br);
    return br;
  }

  Vertex w = z24.min();
  VertexSet base;
  const VertexSet r4 = a.r(4);
  rpools = {{&z4, &r4}};
  component_base(g, zp, zp.Y4, rpools, true, base);
  CompletionSpec spec;
  VertexSet third = a.r(2).unite(a.r(4));
  third.insert(w);
  spec.triples.push_back({g.closed_nb(a.v(1)), g.closed_nb(a.v(7)), third});
  spec.fallback = VertexSet{a.v(2), a.v(4), a.v(6), w};
  auto [set, comp] = complete_base(g, base, spec);
  BranchResult br{set, "P7/Z24eq1", comp};
  assert_dominating(g, br);
  return br;
}

}  // namespace

BranchResult solve_p7_p8(const Graph& g, const InducedWitness& p7) {
  VertexSet spine(p7.vertices);
  VertexSet w = g.vertices().minus(closed_neighborhood(g, spine));
  if (w.empty()) return bounded_result(g, 7, "P7/noW");

  PathContext fwd{path_anatomy(g, p7, false), {}};
  fwd.zp = z_partition(g, fwd.a, ZScheme::P8C);
  PathContext rev{path_anatomy(g, p7, true), {}};
  rev.zp = z_partition(g, rev.a, ZScheme::P8C);

  auto z24_of = [](const PathContext& c) -> const VertexSet& {
    static const VertexSet empty{};
    auto it = c.zp.Z_pair.find({2, 4});
    return it == c.zp.Z_pair.end() ? empty : it->second;
  };
  if (!z24_of(fwd).empty()) return p8c_z24_branch(g, fwd);
  if (!z24_of(rev).empty()) return p8c_z24_branch(g, rev);

  auto zs = [](const PathContext& c, int i) -> const VertexSet& {
    static const VertexSet empty{};
    auto it = c.zp.Z_single.find(i);
    return it == c.zp.Z_single.end() ? empty : it->second;
  };

  const VertexSet& y3 = fwd.zp.Y3;
  const VertexSet& y4 = fwd.zp.Y4;
  const VertexSet& z3 = zs(fwd, 3);
  const VertexSet& z4 = zs(fwd, 4);

  const PathContext* ctx = &fwd;
  std::string label;
  bool with_y = true;
  if (!y3.empty() && !y4.empty()) {
    label = "P7/Y3Y4";
  } else if (!y3.empty() || !y4.empty()) {
    // Orient so that Y_4 is the empty side.
    ctx = fwd.zp.Y4.empty() ? &fwd : &rev;
    label = zs(*ctx, 4).empty() ? "P7/Y3" : "P7/Y3Z4";
  } else if (!z3.empty() && !z4.empty()) {
    with_y = false;
    label = "P7/Z3Z4";
  } else if (!z3.empty() || !z4.empty()) {
    with_y = false;
    ctx = !z3.empty() ? &fwd : &rev;
    label = "P7/Z3";
  } else {
    throw StructureViolation("W nonempty but every Z and Y bucket is empty",
                             w.members());
  }

  const Anatomy& a = ctx->a;
  const ZPartition& zp = ctx->zp;
  VertexSet base;
  const VertexSet r3 = a.r(3);
  const VertexSet r4 = a.r(4);
  const VertexSet& cz3 = zs(*ctx, 3);
  const VertexSet& cz4 = zs(*ctx, 4);
  std::vector<std::pair<const VertexSet*, const VertexSet*>> rpools = {
      {&cz4, &r4}, {&cz3, &r3}};
  component_base(g, zp, with_y ? zp.Y : VertexSet{}, rpools, true, base);
  auto [set, comp] = complete_base(g, base, end_pair_spec(g, a));
  BranchResult br{set, label, comp};
  assert_dominating(g, br);
  return br;
}

BranchResult solve_p6_p7(const Graph& g, const InducedWitness& p6) {
  VertexSet spine(p6.vertices);
  VertexSet w = g.vertices().minus(closed_neighborhood(g, spine));
  if (w.empty()) return bounded_result(g, 6, "P6/noW");
  if (w.size() == 1) return bounded_result(g, 7, "P6/smallW");

  Anatomy a = path_anatomy(g, p6, false);
  ZPartition zp = z_partition(g, a, ZScheme::P6P7);

  CompletionSpec spec;
  spec.singles.push_back(g.common_neighbors(a.v(1), a.v(6)));
  spec.pairs.emplace_back(g.closed_nb(a.v(1)), g.closed_nb(a.v(6)));
  spec.fallback = VertexSet{a.v(2), a.v(4), a.v(6)};

  auto it24 = zp.Z_pair.find({2, 4});
  if (it24 != zp.Z_pair.end() && !it24->second.empty()) {
    const VertexSet& z24 = it24->second;
    if (!a.r(3).empty())
      throw StructureViolation("R_3 nonempty alongside Z_24", a.r(3).members());
    if (!(w == z24))
      throw StructureViolation("W exceeds Z_24 in the Z_24 case",
                               w.minus(z24).members());
    VertexSet base;
    Vertex first = z24.min();
    base.insert(min_neighbor_in(g, first, a.r(2)));
    for (Vertex other : z24)
      if (other != first) base.insert(min_neighbor_in(g, other, a.r(4)));
    auto [set, comp] = complete_base(g, base, spec);
    BranchResult br{set, "P6/Z24", comp};
    assert_dominating(g, br);
    return br;
  }

  VertexSet base;
  const VertexSet r3 = a.r(3);
  static const VertexSet empty{};
  auto z3it = zp.Z_single.find(3);
  const VertexSet& z3 = z3it == zp.Z_single.end() ? empty : z3it->second;
  std::vector<std::pair<const VertexSet*, const VertexSet*>> rpools = {
      {&z3, &r3}};
  component_base(g, zp, zp.Y3, rpools, true, base);
  auto [set, comp] = complete_base(g, base, spec);
  BranchResult br{set, zp.Y3.empty() ? "P6/Z3" : "P6/Y3", comp};
  assert_dominating(g, br);
  return br;
}

}  // namespace clawdom
