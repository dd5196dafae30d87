#include "clawdom/driver.hpp"

#include <stdexcept>

#include "clawdom/chordal.hpp"
#include "clawdom/errors.hpp"
#include "clawdom/exact.hpp"
#include "clawdom/reduce.hpp"

namespace clawdom {

std::string ClassReport::to_string() const {
  std::string out = "claw_free=";
  out += claw_free ? "1" : "0";
  if (claw_witness) out += "(" + claw_witness->to_string() + ")";
  out += " p" + std::to_string(max_path) + "_free=";
  out += pk_free ? "1" : "0";
  if (path_witness) out += "(" + path_witness->to_string() + ")";
  return out;
}

ClassReport verify_membership(const Graph& g, int max_path) {
  if (max_path < 6 || max_path > 8)
    throw std::invalid_argument("verify_membership: max_path must be 6..8");
  ClassReport report;
  report.max_path = max_path;
  if (auto claw = find_claw(g)) {
    report.claw_free = false;
    report.claw_witness = claw;
  }
  if (auto path = find_induced_path(g, max_path)) {
    report.pk_free = false;
    report.path_witness = path;
  }
  return report;
}

namespace {

// The theorem's fall-through: long cycles first, then paths, then C4, then
// the chordal base. Reaching a later case certifies the earlier subgraphs
// are absent, which is exactly the precondition the case needs.
BranchResult dispatch_kernel(const Graph& k, int max_path) {
  if (max_path == 8) {
    if (auto c8 = find_induced_cycle(k, 8)) return solve_cycle_dominates_all(k, *c8);
    if (auto c7 = find_induced_cycle(k, 7)) return solve_cycle_dominates_all(k, *c7);
    if (auto c6 = find_induced_cycle(k, 6)) return solve_c6_p8(k, *c6);
    if (auto c5 = find_induced_cycle(k, 5)) return solve_c5_p8(k, *c5);
    if (auto p7 = find_induced_path(k, 7)) return solve_p7_p8(k, *p7);
    if (auto p6 = find_induced_path(k, 6)) return solve_p6_p7(k, *p6);
  } else if (max_path == 7) {
    if (auto c7 = find_induced_cycle(k, 7)) return solve_cycle_dominates_all(k, *c7);
    if (auto c6 = find_induced_cycle(k, 6)) return solve_cycle_dominates_all(k, *c6);
    if (auto c5 = find_induced_cycle(k, 5)) return solve_c5_p7_small(k, *c5);
    if (auto p6 = find_induced_path(k, 6)) return solve_p6_p7(k, *p6);
  } else {
    if (auto c6 = find_induced_cycle(k, 6)) return solve_cycle_dominates_all(k, *c6);
    if (auto c5 = find_induced_cycle(k, 5)) return solve_cycle_dominates_all(k, *c5);
  }
  if (auto c4 = find_induced_cycle(k, 4)) return solve_c4_p6(k, *c4);
  auto order = lexbfs_elimination(k);
  if (!order)
    throw StructureViolation("kernel is not chordal after the dispatch chain");
  return BranchResult{solve_chordal_clawfree(k, *order), "chordal",
                      Completion::None};
}

std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

}  // namespace

Solution solve(const Graph& g, const SolveOptions& options) {
  Solution sol;
  sol.n = g.n();
  sol.report = verify_membership(g, options.max_path);

  if (!sol.report.member()) {
    if (!options.fallback_exact) throw ClassViolationError(sol.report);
    sol.set = mds_exact(g);
    sol.gamma = sol.set.size();
    sol.branch_trace.push_back("fallback-exact");
    return sol;
  }

  std::vector<Vertex> global;
  int ci = 0;
  for (const VertexSet& comp : connected_components(g)) {
    auto [cg, cmap] = induced_subgraph(g, comp);
    std::string cname = "c" + std::to_string(ci++);

    LiftStack stack = reduce_to_kernel(cg);
    for (const auto& step : stack.steps) {
      if (step.kind == ReductionKind::TwinDelete)
        sol.reductions.push_back(cname + ":twin(" +
                                 std::to_string(step.removed.min()) + "->" +
                                 std::to_string(step.survivor) + ")");
      else
        sol.reductions.push_back(cname + ":leaf(" +
                                 std::to_string(step.committed) + ":" +
                                 set_to_string(step.removed) + ")");
    }

    std::vector<VertexSet> kernel_sets;
    for (size_t ki = 0; ki < stack.kernels.size(); ++ki) {
      const Graph& kg = stack.kernels[ki];
      std::string where = cname + ".k" + std::to_string(ki);
      if (kg.n() <= options.small_cutoff) {
        kernel_sets.push_back(mds_exact(kg));
        sol.branch_trace.push_back(where + ":small");
      } else {
        BranchResult br = dispatch_kernel(kg, options.max_path);
        kernel_sets.push_back(br.set);
        std::string entry = where + ":" + br.branch;
        if (br.completion != Completion::None)
          entry += "+" + std::string(completion_name(br.completion));
        sol.branch_trace.push_back(entry);
      }
    }

    VertexSet lifted = lift_solution(cg, stack, kernel_sets);
    for (Vertex v : lifted) global.push_back(cmap[v]);
  }

  sol.set = VertexSet(std::move(global));
  sol.gamma = sol.set.size();
  if (!is_dominating(g, sol.set))
    throw StructureViolation("solve produced a non-dominating set");
  return sol;
}

}  // namespace clawdom
