#ifndef CLAWDOM_ERRORS_HPP
#define CLAWDOM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace clawdom {

// Raised by build_graph on malformed edge lists.
class GraphError : public std::runtime_error {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, OutOfRange };

  GraphError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A structural fact asserted by one of the case constructions failed to hold.
// On an input whose class membership was verified this indicates a bug; on an
// unverified input it indicates the input is outside the class.
class StructureViolation : public std::runtime_error {
 public:
  StructureViolation(std::string kind, std::vector<int> offenders = {})
      : std::runtime_error("structure violation: " + kind),
        kind_(std::move(kind)),
        offenders_(std::move(offenders)) {}

  const std::string& kind() const { return kind_; }
  const std::vector<int>& offenders() const { return offenders_; }

 private:
  std::string kind_;
  std::vector<int> offenders_;
};

}  // namespace clawdom

#endif  // CLAWDOM_ERRORS_HPP
