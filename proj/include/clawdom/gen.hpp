#ifndef CLAWDOM_GEN_HPP
#define CLAWDOM_GEN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "clawdom/graph.hpp"

namespace clawdom {

struct InstanceManifest {
  std::string family;
  int n = 0;  // actual vertex count
  int q = 0;
  std::uint64_t seed = 0;
  std::string expected_branch;  // prefix of the expected solve trace, may be ""
  bool claw_free = true;
  bool p8_free = true;
};

struct GeneratedInstance {
  Graph graph;
  InstanceManifest manifest;
};

class GenError : public std::runtime_error {
 public:
  explicit GenError(const std::string& msg) : std::runtime_error(msg) {}
};

const std::vector<std::string>& family_names();

// Deterministic in (family, n, q, seed). The graph is verified against the
// family's forbidden subgraphs and spine before being returned; generation
// retries with perturbed randomness and throws GenError after 64 attempts.
// n is a target size, the manifest records the actual size.
GeneratedInstance gen_family(const std::string& family, int n, int q,
                             std::uint64_t seed);

struct BenchOptions {
  std::vector<std::string> families;
  std::vector<int> sizes;
  std::uint64_t seed = 1;
  int per_size = 1;
  int oracle_cutoff = 18;
  int small_cutoff = 12;
};

// One JSON object per row: family, n, seed, solve_ms, gamma, branch,
// oracle ("ok"/"skipped"), oracle_ms, match.
std::string run_bench(const BenchOptions& options);

}  // namespace clawdom

#endif  // CLAWDOM_GEN_HPP
