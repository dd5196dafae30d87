#ifndef CLAWDOM_IO_HPP
#define CLAWDOM_IO_HPP

#include <stdexcept>
#include <string>

#include "clawdom/driver.hpp"
#include "clawdom/graph.hpp"

namespace clawdom {

enum class GraphFormat { EdgeList, Dimacs };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// edgelist: "n m" then m lines "u v", 0-based, '#' comment lines ignored.
// dimacs:   "p edge n m" then "e u v", 1-based, 'c' comment lines ignored.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// Single flat JSON object, stable key order, newline-terminated.
std::string emit_solution(const Solution& sol);

}  // namespace clawdom

#endif  // CLAWDOM_IO_HPP
