#include "clawdom/io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace clawdom {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text, char comment) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == comment) continue;
    out.push_back({number, line});
  }
  return out;
}

Graph parse_edgelist(const std::string& text) {
  auto lines = content_lines(text, '#');
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  long long n, m;
  {
    std::istringstream hs(lines[0].text);
    if (!(hs >> n >> m) || n < 0 || m < 0)
      throw ParseError(lines[0].number, "malformed header, expected 'n m'");
  }
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(lines.size() - 1));
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream es(lines[i].text);
    long long u, v;
    if (!(es >> u >> v))
      throw ParseError(lines[i].number, "malformed edge, expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lines[i].number, "identifier out of range");
    if (u == v) throw ParseError(lines[i].number, "self-loop");
    auto key = std::minmax(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(key).second)
      throw ParseError(lines[i].number, "duplicate edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(const std::string& text) {
  auto lines = content_lines(text, 'c');
  if (lines.empty()) throw ParseError(1, "missing header 'p edge n m'");
  long long n, m;
  {
    std::istringstream hs(lines[0].text);
    std::string p, kind;
    if (!(hs >> p >> kind >> n >> m) || p != "p" || kind != "edge" || n < 0 ||
        m < 0)
      throw ParseError(lines[0].number, "malformed header, expected 'p edge n m'");
  }
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(lines.back().number,
                     "edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(lines.size() - 1));
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream es(lines[i].text);
    std::string e;
    long long u, v;
    if (!(es >> e >> u >> v) || e != "e")
      throw ParseError(lines[i].number, "malformed edge, expected 'e u v'");
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError(lines[i].number, "identifier out of range");
    if (u == v) throw ParseError(lines[i].number, "self-loop");
    auto key = std::minmax(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    if (!seen.insert(key).second)
      throw ParseError(lines[i].number, "duplicate edge");
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return build_graph(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edgelist(text)
                                         : parse_dimacs(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  auto edges = g.edges();
  if (format == GraphFormat::EdgeList) {
    out << g.n() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  } else {
    out << "p edge " << g.n() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

std::string emit_solution(const Solution& sol) {
  nlohmann::ordered_json j;
  j["n"] = sol.n;
  j["gamma"] = sol.gamma;
  j["dominating_set"] = sol.set.members();
  j["branch_trace"] = sol.branch_trace;
  j["reductions"] = sol.reductions;
  j["class_report"] = sol.report.to_string();
  return j.dump() + "\n";
}

}  // namespace clawdom
