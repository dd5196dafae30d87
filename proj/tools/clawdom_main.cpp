#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clawdom/driver.hpp"
#include "clawdom/errors.hpp"
#include "clawdom/exact.hpp"
#include "clawdom/gen.hpp"
#include "clawdom/io.hpp"

namespace {

constexpr int kExitClassViolation = 2;
constexpr int kExitParseError = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

clawdom::GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return clawdom::GraphFormat::EdgeList;
  if (name == "dimacs") return clawdom::GraphFormat::Dimacs;
  throw std::runtime_error("unknown format: " + name);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum dominating sets for (claw,P8)-free graphs"};
  app.require_subcommand(1);

  std::string file, format = "edgelist";
  bool fallback_exact = false;
  int small_cutoff = 12;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_option("--format", format, "edgelist|dimacs");
  solve_cmd->add_flag("--fallback-exact", fallback_exact,
                      "solve non-members with the exact search");
  solve_cmd->add_option("--small-cutoff", small_cutoff,
                        "kernels at most this size go to the exact search");

  int cap = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact search on a file");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--format", format, "edgelist|dimacs");
  oracle_cmd->add_option("--cap", cap, "bound the solution size");

  auto* verify_cmd = app.add_subcommand("verify", "class membership report");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--format", format, "edgelist|dimacs");

  std::string family, out_path;
  int gen_n = 14, gen_q = 2;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "generate a family instance");
  gen_cmd->add_option("--family", family)->required();
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--q", gen_q);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out_path);

  std::string families_arg = "line_graph", sizes_arg = "40,60,80,100";
  int per_size = 1, oracle_cutoff = 18;
  auto* bench_cmd = app.add_subcommand("bench", "timing table over families");
  bench_cmd->add_option("--families", families_arg, "comma-separated list");
  bench_cmd->add_option("--sizes", sizes_arg, "comma-separated list");
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--per", per_size, "instances per (family,size)");
  bench_cmd->add_option("--oracle-cutoff", oracle_cutoff);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      clawdom::Graph g = clawdom::parse_graph(read_file(file), parse_format(format));
      clawdom::SolveOptions opts;
      opts.fallback_exact = fallback_exact;
      opts.small_cutoff = small_cutoff;
      clawdom::Solution sol = clawdom::solve(g, opts);
      std::cout << clawdom::emit_solution(sol);
    } else if (*oracle_cmd) {
      clawdom::Graph g = clawdom::parse_graph(read_file(file), parse_format(format));
      nlohmann::ordered_json j;
      j["n"] = g.n();
      if (cap > 0) {
        auto r = clawdom::mds_bounded(g, cap);
        j["found"] = r.has_value();
        j["gamma"] = r ? r->size() : -1;
        j["dominating_set"] = r ? r->members() : std::vector<int>{};
      } else {
        clawdom::VertexSet r = clawdom::mds_exact(g);
        j["found"] = true;
        j["gamma"] = r.size();
        j["dominating_set"] = r.members();
      }
      std::cout << j.dump() << "\n";
    } else if (*verify_cmd) {
      clawdom::Graph g = clawdom::parse_graph(read_file(file), parse_format(format));
      clawdom::ClassReport report = clawdom::verify_membership(g);
      nlohmann::ordered_json j;
      j["n"] = g.n();
      j["member"] = report.member();
      j["class_report"] = report.to_string();
      std::cout << j.dump() << "\n";
      return report.member() ? 0 : kExitClassViolation;
    } else if (*gen_cmd) {
      clawdom::GeneratedInstance inst =
          clawdom::gen_family(family, gen_n, gen_q, seed);
      std::string text = clawdom::emit_graph(inst.graph, parse_format(format));
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
      } else {
        std::cout << text;
      }
      nlohmann::ordered_json m;
      m["family"] = inst.manifest.family;
      m["n"] = inst.manifest.n;
      m["q"] = inst.manifest.q;
      m["seed"] = inst.manifest.seed;
      m["expected_branch"] = inst.manifest.expected_branch;
      m["claw_free"] = inst.manifest.claw_free;
      m["p8_free"] = inst.manifest.p8_free;
      std::cerr << m.dump() << "\n";
    } else if (*bench_cmd) {
      clawdom::BenchOptions opts;
      opts.families = split_list(families_arg);
      for (const std::string& s : split_list(sizes_arg))
        opts.sizes.push_back(std::stoi(s));
      opts.seed = seed;
      opts.per_size = per_size;
      opts.oracle_cutoff = oracle_cutoff;
      std::cout << clawdom::run_bench(opts);
    }
  } catch (const clawdom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const clawdom::ClassViolationError& e) {
    nlohmann::ordered_json j;
    j["error"] = "class_violation";
    j["class_report"] = e.report().to_string();
    std::cout << j.dump() << "\n";
    return kExitClassViolation;
  } catch (const clawdom::StructureViolation& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
