#ifndef CLAWDOM_DRIVER_HPP
#define CLAWDOM_DRIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "clawdom/construct.hpp"
#include "clawdom/detect.hpp"
#include "clawdom/graph.hpp"

namespace clawdom {

struct ClassReport {
  int max_path = 8;  // the k of the P_k-free requirement
  bool claw_free = true;
  bool pk_free = true;
  std::optional<InducedWitness> claw_witness;
  std::optional<InducedWitness> path_witness;

  bool member() const { return claw_free && pk_free; }
  std::string to_string() const;
};

class ClassViolationError : public std::runtime_error {
 public:
  explicit ClassViolationError(ClassReport report)
      : std::runtime_error("input is not (claw,P" +
                           std::to_string(report.max_path) + ")-free: " +
                           report.to_string()),
        report_(std::move(report)) {}
  const ClassReport& report() const { return report_; }

 private:
  ClassReport report_;
};

struct SolveOptions {
  bool fallback_exact = false;
  int small_cutoff = 12;
  int max_path = 8;  // 8 = main theorem; 7 and 6 expose the shorter chains
};

struct Solution {
  int n = 0;
  VertexSet set;
  int gamma = 0;
  std::vector<std::string> branch_trace;
  std::vector<std::string> reductions;
  ClassReport report;
};

ClassReport verify_membership(const Graph& g, int max_path = 8);

// Kernelize each component, dispatch each kernel to the matching case,
// lift, and certify. Raises ClassViolationError on non-members unless
// fallback_exact is set.
Solution solve(const Graph& g, const SolveOptions& options = {});

}  // namespace clawdom

#endif  // CLAWDOM_DRIVER_HPP
