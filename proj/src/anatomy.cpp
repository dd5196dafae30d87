#include "clawdom/anatomy.hpp"

#include <algorithm>
#include <stdexcept>

#include "clawdom/errors.hpp"

namespace clawdom {

namespace {

const VertexSet kEmpty{};

std::vector<Vertex> labeled_order(const InducedWitness& w, bool cycle,
                                  SpineLabel label, bool reversed) {
  int m = w.k();
  std::vector<Vertex> order(m);
  if (cycle) {
    for (int i = 0; i < m; ++i) {
      int idx = label.reflected ? (label.offset - i) % m : (label.offset + i) % m;
      order[i] = w.vertices[(idx + m) % m];
    }
  } else {
    order = w.vertices;
    if (reversed) std::reverse(order.begin(), order.end());
  }
  return order;
}

Anatomy compute(const Graph& g, std::vector<Vertex> order, bool cycle,
                bool expect_w_independent) {
  Anatomy a;
  a.order = std::move(order);
  a.cycle = cycle;
  a.spine = VertexSet(a.order);
  int m = a.m();
  std::vector<int> slot_of(g.n(), -1);  // spine position, 1-based
  for (int i = 1; i <= m; ++i) slot_of[a.v(i)] = i;

  std::vector<Vertex> w_members;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (a.spine.contains(x)) continue;
    std::vector<int> hits;
    for (Vertex u : g.neighbors(x))
      if (slot_of[u] > 0) hits.push_back(slot_of[u]);
    std::sort(hits.begin(), hits.end());
    if (hits.empty()) {
      w_members.push_back(x);
      continue;
    }
    if (hits.size() == 1)
      throw StructureViolation("vertex with a single spine neighbor",
                               {x, a.v(hits[0])});
    a.S.insert(x);
    a.S_by_count[static_cast<int>(hits.size())].insert(x);
    if (hits.size() == 2) {
      int i = hits[0], j = hits[1];
      int slot = -1;
      if (j == i + 1)
        slot = i;
      else if (cycle && i == 1 && j == m)
        slot = m;
      if (slot < 0)
        throw StructureViolation(
            "S_2 vertex attached to a non-consecutive spine pair",
            {x, a.v(i), a.v(j)});
      a.H[slot].insert(x);
    }
  }
  a.W = VertexSet(std::move(w_members));

  for (const auto& [slot, hs] : a.H) {
    const auto& mem = hs.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (!g.has_edge(mem[i], mem[j]))
          throw StructureViolation("H slot is not a clique",
                                   {mem[i], mem[j], a.v(slot)});
    VertexSet r;
    for (Vertex h : hs) {
      VertexSet nb(g.neighbors(h));
      if (!nb.intersect(a.W).empty()) r.insert(h);
    }
    if (!r.empty()) a.R[slot] = r;
  }

  if (!cycle) {
    auto it1 = a.R.find(1);
    auto itm = a.R.find(m - 1);
    if (it1 != a.R.end() && !it1->second.empty())
      throw StructureViolation("R_1 must be empty for a path spine",
                               it1->second.members());
    if (itm != a.R.end() && !itm->second.empty())
      throw StructureViolation("R_last must be empty for a path spine",
                               itm->second.members());
  }

  if (expect_w_independent) {
    const auto& mem = a.W.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (g.has_edge(mem[i], mem[j]))
          throw StructureViolation("W is not an independent set",
                                   {mem[i], mem[j]});
  }
  return a;
}

}  // namespace

const VertexSet& Anatomy::h(int slot) const {
  auto it = H.find(slot);
  return it == H.end() ? kEmpty : it->second;
}

const VertexSet& Anatomy::r(int slot) const {
  auto it = R.find(slot);
  return it == R.end() ? kEmpty : it->second;
}

Anatomy cycle_anatomy(const Graph& g, const InducedWitness& c, SpineLabel label,
                      bool expect_w_independent) {
  if (c.kind != WitnessKind::Cycle || !c.verify(g))
    throw StructureViolation("cycle_anatomy requires a verified induced cycle");
  return compute(g, labeled_order(c, true, label, false), true,
                 expect_w_independent);
}

Anatomy path_anatomy(const Graph& g, const InducedWitness& p, bool reversed) {
  if (p.kind != WitnessKind::Path || !p.verify(g))
    throw StructureViolation("path_anatomy requires a verified induced path");
  return compute(g, labeled_order(p, false, {}, reversed), false, false);
}

namespace {

VertexSet open_nb(const Graph& g, Vertex v) {
  return VertexSet(g.neighbors(v));
}

VertexSet nb_of_set(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out = out.unite(open_nb(g, v));
  return out.minus(s);
}

std::vector<int> attachment_slots(const Graph& g, const Anatomy& a, Vertex w) {
  std::vector<int> slots;
  for (const auto& [slot, r] : a.R)
    if (!open_nb(g, w).intersect(r).empty()) slots.push_back(slot);
  return slots;
}

void check_pairwise_nonadjacent(const Graph& g, const VertexSet& s,
                                const char* what) {
  const auto& mem = s.members();
  for (size_t i = 0; i < mem.size(); ++i)
    for (size_t j = i + 1; j < mem.size(); ++j)
      if (g.has_edge(mem[i], mem[j]))
        throw StructureViolation(what, {mem[i], mem[j]});
}

void check_anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y,
                        const char* what) {
  for (Vertex u : x)
    for (Vertex v : y)
      if (g.has_edge(u, v)) throw StructureViolation(what, {u, v});
}

void check_clique(const Graph& g, const VertexSet& s, const char* what) {
  const auto& mem = s.members();
  for (size_t i = 0; i < mem.size(); ++i)
    for (size_t j = i + 1; j < mem.size(); ++j)
      if (!g.has_edge(mem[i], mem[j]))
        throw StructureViolation(what, {mem[i], mem[j]});
}

// Connected components of g restricted to s, ordered by smallest member,
// each with a verified universal vertex.
void split_components(const Graph& g, const VertexSet& s, ZPartition& zp,
                      const char* missing_universal) {
  auto [sub, map] = induced_subgraph(g, s);
  for (const VertexSet& local : connected_components(sub)) {
    std::vector<Vertex> comp;
    for (Vertex v : local) comp.push_back(map[v]);
    VertexSet compset(std::move(comp));
    Vertex uni = -1;
    for (Vertex u : compset) {
      bool ok = true;
      for (Vertex v : compset)
        if (v != u && !g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) {
        uni = u;
        break;
      }
    }
    if (uni < 0)
      throw StructureViolation(missing_universal, compset.members());
    zp.components.push_back(std::move(compset));
    zp.universal.push_back(uni);
  }
}

void check_w_attaches_only_via_r(const Graph& g, const Anatomy& a) {
  VertexSet all_r;
  for (const auto& [slot, r] : a.R) all_r = all_r.unite(r);
  for (Vertex w : a.W) {
    VertexSet outside = open_nb(g, w).minus(a.W).minus(all_r);
    if (!outside.empty())
      throw StructureViolation("W vertex attached outside the R sets",
                               {w, outside.min()});
  }
}

void check_mate_edges(const Graph& g, Vertex w, const VertexSet& ri,
                      const VertexSet& rj) {
  VertexSet mi = open_nb(g, w).intersect(ri);
  VertexSet mj = open_nb(g, w).intersect(rj);
  for (Vertex x : mi)
    for (Vertex y : mj)
      if (!g.has_edge(x, y))
        throw StructureViolation("pair-attached W vertex with non-adjacent mates",
                                 {w, x, y});
}

ZPartition z_partition_path(const Graph& g, const Anatomy& a, bool p8c) {
  // Slots: P8C has R-slots 2..5 on a P7 spine, P6P7 has 2..4 on a P6 spine.
  const int lo = 2, hi = p8c ? 5 : 4;
  const std::vector<std::pair<int, int>> allowed_pairs =
      p8c ? std::vector<std::pair<int, int>>{{2, 4}, {3, 5}}
          : std::vector<std::pair<int, int>>{{2, 4}};

  check_w_attaches_only_via_r(g, a);

  ZPartition zp;
  for (Vertex w : a.W) {
    auto slots = attachment_slots(g, a, w);
    if (slots.empty()) continue;
    zp.Z.insert(w);
    if (slots.size() > 2)
      throw StructureViolation("W vertex attached to three R slots", {w});
    if (slots.size() == 2) {
      std::pair<int, int> p{slots[0], slots[1]};
      if (std::find(allowed_pairs.begin(), allowed_pairs.end(), p) ==
          allowed_pairs.end())
        throw StructureViolation("W vertex attached to an invalid R slot pair",
                                 {w, slots[0], slots[1]});
      check_mate_edges(g, w, a.r(p.first), a.r(p.second));
      zp.Z_pair[p].insert(w);
    }
  }

  VertexSet paired;
  for (const auto& [p, s] : zp.Z_pair) paired = paired.unite(s);
  std::map<int, VertexSet> used;
  for (int i = lo; i <= hi; ++i) {
    VertexSet u;
    for (Vertex w : paired) u = u.unite(open_nb(g, w).intersect(a.r(i)));
    used[i] = u;
  }
  for (int i = lo; i <= hi; ++i) {
    VertexSet fresh = a.r(i).minus(used[i]);
    VertexSet zi;
    for (Vertex w : a.W.minus(paired))
      if (!open_nb(g, w).intersect(fresh).empty()) zi.insert(w);
    if (!zi.empty()) zp.Z_single[i] = zi;
  }

  auto zs = [&](int i) -> const VertexSet& {
    auto it = zp.Z_single.find(i);
    return it == zp.Z_single.end() ? kEmpty : it->second;
  };
  auto zpair = [&](int i, int j) -> const VertexSet& {
    auto it = zp.Z_pair.find({i, j});
    return it == zp.Z_pair.end() ? kEmpty : it->second;
  };

  // Outer single slots collapse on a kernelized member.
  if (!zs(lo).empty())
    throw StructureViolation("Z at the low outer slot must be empty",
                             zs(lo).members());
  if (!zs(hi).empty())
    throw StructureViolation("Z at the high outer slot must be empty",
                             zs(hi).members());

  const VertexSet& z24 = zpair(2, 4);
  const VertexSet& z35 = p8c ? zpair(3, 5) : kEmpty;
  check_pairwise_nonadjacent(g, z24, "Z_24 is not independent");
  if (p8c) {
    check_pairwise_nonadjacent(g, z35, "Z_35 is not independent");
    check_anticomplete(g, z24, z35, "Z_24 adjacent to Z_35");
  }
  {
    VertexSet zz = z24.unite(z35);
    const auto& mem = zz.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (!open_nb(g, mem[i]).intersect(open_nb(g, mem[j])).empty())
          throw StructureViolation("pair-attached W vertices share a neighbor",
                                   {mem[i], mem[j]});
  }

  const VertexSet& z3 = zs(3);
  const VertexSet& z4 = p8c ? zs(4) : kEmpty;
  check_anticomplete(g, z3, z4, "Z_3 adjacent to Z_4");

  VertexSet bucketed = paired.unite(z3).unite(z4);
  for (int i = lo; i <= hi; ++i) bucketed = bucketed.unite(zs(i));
  VertexSet stray = zp.Z.minus(bucketed);
  if (!stray.empty())
    throw StructureViolation("Z vertex outside every Z bucket",
                             stray.members());

  zp.Y = a.W.minus(zp.Z);
  for (Vertex y : zp.Y) {
    VertexSet nb = open_nb(g, y);
    if (!nb.intersect(paired).empty())
      throw StructureViolation("Y vertex adjacent to a pair-attached vertex",
                               {y});
    bool has3 = !nb.intersect(z3).empty();
    bool has4 = !nb.intersect(z4).empty();
    if (has3 && has4)
      throw StructureViolation("Y vertex adjacent to both Z_3 and Z_4", {y});
    if (!has3 && !has4)
      throw StructureViolation("Y vertex without a Z_3 or Z_4 neighbor", {y});
    if (has3)
      zp.Y3.insert(y);
    else
      zp.Y4.insert(y);
    check_clique(g, nb, "Y vertex with a non-clique neighborhood");
  }
  check_pairwise_nonadjacent(g, zp.Y3, "Y_3 is not independent");
  check_pairwise_nonadjacent(g, zp.Y4, "Y_4 is not independent");
  check_anticomplete(g, zp.Y3, zp.Y4, "Y_3 adjacent to Y_4");
  {
    const auto& mem = zp.Y.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (!open_nb(g, mem[i]).intersect(open_nb(g, mem[j])).empty())
          throw StructureViolation("Y vertices share a neighbor",
                                   {mem[i], mem[j]});
  }

  split_components(g, z3.unite(z4), zp,
                   "Z component without a universal vertex");

  // Distinct components cannot share an R neighbor.
  VertexSet r34 = a.r(3).unite(a.r(4));
  std::vector<VertexSet> comp_r;
  for (const auto& comp : zp.components)
    comp_r.push_back(nb_of_set(g, comp).intersect(r34));
  for (size_t i = 0; i < comp_r.size(); ++i)
    for (size_t j = i + 1; j < comp_r.size(); ++j)
      if (!comp_r[i].intersect(comp_r[j]).empty())
        throw StructureViolation("two Z components share an R neighbor",
                                 {zp.components[i].min(), zp.components[j].min()});
  return zp;
}

ZPartition z_partition_clawp8(const Graph& g, const Anatomy& a) {
  check_w_attaches_only_via_r(g, a);

  std::vector<int> support;
  for (const auto& [slot, r] : a.R)
    if (!r.empty()) support.push_back(slot);
  if (!(support.empty() || support == std::vector<int>{1} ||
        support == std::vector<int>{1, 3}))
    throw StructureViolation("C5 anatomy is not canonically rotated", support);

  ZPartition zp;
  for (Vertex w : a.W) {
    auto slots = attachment_slots(g, a, w);
    if (slots.empty()) continue;
    zp.Z.insert(w);
    if (slots == std::vector<int>{1, 3}) {
      check_mate_edges(g, w, a.r(1), a.r(3));
      zp.Z_pair[{1, 3}].insert(w);
    } else if (slots == std::vector<int>{1}) {
      zp.Z_single[1].insert(w);
    } else {
      zp.Z_single[3].insert(w);
    }
  }
  zp.Y = a.W.minus(zp.Z);

  auto zs = [&](int i) -> const VertexSet& {
    auto it = zp.Z_single.find(i);
    return it == zp.Z_single.end() ? kEmpty : it->second;
  };
  auto it13 = zp.Z_pair.find({1, 3});
  const VertexSet& z13 = it13 == zp.Z_pair.end() ? kEmpty : it13->second;

  if (!z13.empty()) {
    if (!zs(1).empty() || !zs(3).empty())
      throw StructureViolation("Z_1/Z_3 alongside a nonempty Z_13",
                               zs(1).unite(zs(3)).members());
    if (!zp.Y.empty())
      throw StructureViolation("Y alongside a nonempty Z_13", zp.Y.members());
    check_pairwise_nonadjacent(g, z13, "Z_13 is not independent");
    const auto& mem = z13.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (!g.closed_nb(mem[i]).intersect(g.closed_nb(mem[j])).empty())
          throw StructureViolation("Z_13 members with intersecting N[]",
                                   {mem[i], mem[j]});
    // R_1 (resp. R_3) vertices agree on S u V(C) outside the opposite slot.
    for (int slot : {1, 3}) {
      int other = slot == 1 ? 3 : 1;
      VertexSet scope = a.S.minus(a.h(other)).unite(a.spine);
      const auto& rm = a.r(slot).members();
      for (size_t i = 0; i + 1 < rm.size(); ++i)
        if (!(g.closed_nb(rm[i]).intersect(scope) ==
              g.closed_nb(rm[i + 1]).intersect(scope)))
          throw StructureViolation("R vertices with different S neighborhoods",
                                   {rm[i], rm[i + 1]});
    }
    return zp;
  }

  if (support == std::vector<int>{1, 3})
    throw StructureViolation("R_1 and R_3 both nonempty with Z_13 empty");
  if (!a.h(2).empty() || !a.h(5).empty())
    throw StructureViolation("H_2/H_5 nonempty in the single-slot case",
                             a.h(2).unite(a.h(5)).members());

  for (Vertex z : zp.Z)
    if (open_nb(g, z).intersect(zp.Y).empty()) zp.ZA.insert(z);

  check_pairwise_nonadjacent(g, zp.Y, "Y is not independent");
  for (Vertex y : zp.Y) {
    VertexSet nb = open_nb(g, y);
    check_clique(g, nb, "Y vertex with a non-clique neighborhood");
    if (nb.size() < 2)
      throw StructureViolation("Y vertex is a leaf", {y});
  }
  {
    const auto& mem = zp.Y.members();
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (!open_nb(g, mem[i]).intersect(open_nb(g, mem[j])).empty())
          throw StructureViolation("Y vertices share a neighbor",
                                   {mem[i], mem[j]});
  }

  check_anticomplete(g, zp.ZA, zp.Z.minus(zp.ZA),
                     "Z_A adjacent to a neighbor of Y");
  split_components(g, zp.ZA, zp, "Z_A component without a universal vertex");
  std::vector<VertexSet> comp_r;
  for (const auto& comp : zp.components)
    comp_r.push_back(nb_of_set(g, comp).intersect(a.r(1)));
  for (size_t i = 0; i < comp_r.size(); ++i)
    for (size_t j = i + 1; j < comp_r.size(); ++j)
      if (!comp_r[i].intersect(comp_r[j]).empty())
        throw StructureViolation("two Z_A components share an R_1 neighbor",
                                 {zp.components[i].min(), zp.components[j].min()});
  return zp;
}

}  // namespace

ZPartition z_partition(const Graph& g, const Anatomy& a, ZScheme scheme) {
  switch (scheme) {
    case ZScheme::Clawp8:
      return z_partition_clawp8(g, a);
    case ZScheme::P8C:
      return z_partition_path(g, a, true);
    case ZScheme::P6P7:
      return z_partition_path(g, a, false);
  }
  throw std::logic_error("unreachable");
}

}  // namespace clawdom
