// veccon: solve, verify and generate vector connectivity instances.
//
// Exit status: 0 ok / feasible, 1 infeasible, 2 parse error,
// 3 precondition or dispatch error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "veccon/approx.hpp"
#include "veccon/block_solver.hpp"
#include "veccon/errors.hpp"
#include "veccon/fans.hpp"
#include "veccon/gadgets.hpp"
#include "veccon/generators.hpp"
#include "veccon/io.hpp"
#include "veccon/lowreq_solver.hpp"
#include "veccon/oracle.hpp"

namespace fs = std::filesystem;
using namespace veccon;

namespace {

enum Exit { kOk = 0, kInfeasible = 1, kParse = 2, kDispatch = 3 };

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

// Runs `solve` on every connected component and lifts the answers back.
VertexSet by_component(const Instance& inst, const std::function<VertexSet(const Instance&)>& solve) {
  const int n = inst.vertex_count();
  if (n == 0) return {};
  if (is_connected(inst.graph)) return solve(inst);
  std::vector<int> comp(n, -1);
  VertexSet out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    VertexSet members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : inst.graph.neighbors(members[i])) {
        if (comp[w] < 0) {
          comp[w] = s;
          members.push_back(w);
        }
      }
    }
    normalize(members);
    const Subgraph sub = induced_subgraph(inst.graph, members);
    for (Vertex v : solve(restrict_instance(inst, sub))) out.push_back(sub.to_parent[v]);
  }
  return normalize(out);
}

bool block_cactus_components(const Graph& g) {
  bool ok = true;
  by_component(Instance(g, std::vector<int>(g.vertex_count(), 0)), [&](const Instance& part) {
    ok = ok && is_block_cactus(part.graph);
    return VertexSet{};
  });
  return ok;
}

bool low_requirement(const Instance& inst) {
  return inst.free_set.empty() && inst.max_requirement() <= 2;
}

struct Outcome {
  VertexSet solution;
  std::string algo;  // the solver actually used
};

Outcome run_algo(const Instance& inst, const std::string& algo, const std::string& mapping_path) {
  if (algo == "brute") return {brute_force_min(inst), algo};
  if (algo == "brute-hitting") {
    VertexSet universe(inst.vertex_count());
    std::iota(universe.begin(), universe.end(), 0);
    if (!mapping_path.empty()) {
      const GadgetMapping m = read_mapping_file(mapping_path);
      if (!(m.instance() == inst)) {
        throw InputError("mapping does not describe this instance");
      }
      return {min_hitting_set(claim1_family(m), universe), algo};
    }
    if (!inst.free_set.empty()) throw InputError("brute-hitting requires an empty free set");
    return {min_hitting_set(violating_family(inst.graph, inst.requirements, true), universe), algo};
  }
  if (algo == "greedy") return {by_component(inst, greedy), algo};
  if (algo == "exact") return {by_component(inst, fsveccon), algo};
  if (algo == "block") return {by_component(inst, solve_block_cactus), algo};
  if (algo == "lowreq") return {by_component(inst, solve_lowreq), algo};
  if (algo != "auto") throw InputError("unknown algorithm '" + algo + "'");

  if (block_cactus_components(inst.graph)) return {by_component(inst, fsveccon), "block"};
  if (low_requirement(inst)) return {by_component(inst, solve_lowreq), "lowreq"};
  if (inst.vertex_count() <= brute_cap()) return {brute_force_min(inst), "brute"};
  std::cerr << "warning: no exact method applies to this instance; using greedy\n";
  return {by_component(inst, greedy), "greedy"};
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  emit(out);
}

int cmd_solve(const std::string& path, const std::string& algo, const std::string& mapping,
              bool certify, const std::string& out_path) {
  const Instance inst = read_instance_file(path);
  const auto start = std::chrono::steady_clock::now();
  const Outcome result = run_algo(inst, algo, mapping);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<std::string> comments{"algo " + result.algo,
                                    "size " + std::to_string(result.solution.size()),
                                    "time " + std::to_string(seconds)};
  if (certify) {
    const VertexSet targets = set_union(result.solution, inst.free_set);
    for (Vertex v = 0; v < inst.vertex_count(); ++v) {
      if (contains(result.solution, v) || inst.requirement(v) == 0) continue;
      const LinkResult link = is_k_linked(inst.graph, v, targets, inst.requirement(v));
      if (!link.linked) {
        std::cerr << "error: vertex " << v + 1 << " is not " << inst.requirement(v)
                  << "-linked; separator " << format_set(link.cut.separator) << '\n';
        return kInfeasible;
      }
      if (!validate_fan(inst.graph, link.fan, targets)) {
        throw std::logic_error("fan for vertex " + std::to_string(v + 1) + " failed validation");
      }
      std::string line = "fan " + std::to_string(v + 1) + ":";
      for (const auto& p : link.fan.paths) {
        line += " ";
        for (std::size_t i = 0; i < p.size(); ++i) {
          line += (i ? "-" : "") + std::to_string(p[i] + 1);
        }
      }
      comments.push_back(line);
    }
  }
  write_to(out_path, [&](std::ostream& out) { write_solution(out, result.solution, comments); });
  return kOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
  const Instance inst = read_instance_file(instance_path);
  const VertexSet s = read_solution_file(solution_path, inst.vertex_count());
  const auto bad = first_violation(inst, s);
  if (!bad) {
    std::cout << "feasible\n";
    return kOk;
  }
  const Vertex v = *bad;
  const VertexSet targets = set_union(s, inst.free_set);
  const LinkResult link = is_k_linked(inst.graph, v, targets, inst.requirement(v));
  std::cout << "infeasible: vertex " << v + 1 << " needs " << inst.requirement(v)
            << " disjoint paths, has " << kappa(inst.graph, v, targets) << "; separator "
            << format_set(link.cut.separator) << '\n';
  return kInfeasible;
}

int cmd_reduce(const std::string& path, int k, const std::string& prefix) {
  const Graph g = read_instance_file(path).graph;
  const GadgetMapping m = k > 0 ? build_bipartite_gadget(g, k) : build_gadget(g);
  const std::string source = fs::path(path).filename().string();
  std::vector<std::string> comments{"gadget of " + source};
  if (k > 0) comments.push_back("edges subdivided " + std::to_string(2 * k + 1) + " times");
  write_to(prefix + ".vcn", [&](std::ostream& out) { write_instance(out, m.instance(), comments); });
  write_to(prefix + ".map", [&](std::ostream& out) { write_mapping(out, m); });
  std::cout << "vertices " << m.gadget.vertex_count() << "\nedges " << m.gadget.edge_count()
            << '\n';
  return kOk;
}

int cmd_extract_cover(const std::string& mapping_path, const std::string& solution_path,
                      const std::string& out_path) {
  const GadgetMapping m = read_mapping_file(mapping_path);
  const VertexSet s = read_solution_file(solution_path, m.gadget.vertex_count());
  const VertexSet cover = extract_vertex_cover(m, s);
  write_to(out_path, [&](std::ostream& out) {
    write_solution(out, cover, {"vertex cover of the source graph",
                                "size " + std::to_string(cover.size())});
  });
  return kOk;
}

int cmd_hypergraph(const std::string& path, bool all, const std::string& out_path) {
  const Instance inst = read_instance_file(path);
  if (!inst.free_set.empty()) throw InputError("hypergraph requires an empty free set");
  const ViolatingFamily family = violating_family(inst.graph, inst.requirements, !all);
  write_to(out_path, [&](std::ostream& out) { write_family(out, family); });
  return kOk;
}

struct GenOptions {
  std::string kind = "block";
  int n = 10;
  std::uint64_t seed = 1;
  int r_max = 2;
  double free_fraction = 0.0;
  double p = 0.3;
  int clique_max = 4;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  SplitMix64 rng(o.seed);
  const std::uint64_t graph_seed = rng.next();
  const std::uint64_t req_seed = rng.next();
  Graph g;
  if (o.kind == "block") {
    g = gen_block_graph(o.n, graph_seed, o.clique_max);
  } else if (o.kind == "cactus") {
    g = gen_block_cactus(o.n, graph_seed);
  } else if (o.kind == "random") {
    g = gen_random_connected(o.n, o.p, graph_seed);
  } else {
    throw InputError("unknown generator kind '" + o.kind + "'");
  }
  const Instance inst = gen_requirements(g, o.r_max, req_seed, o.free_fraction);
  std::ostringstream params;
  params << "gen kind " << o.kind << " n " << o.n << " r_max " << o.r_max << " free "
         << o.free_fraction;
  if (o.kind == "random") params << " p " << o.p;
  if (o.kind == "block") params << " clique_max " << o.clique_max;
  const std::vector<std::string> comments{
      std::string("prng ") + SplitMix64::kAlgorithm + " seed " + std::to_string(o.seed),
      params.str()};
  write_to(o.out, [&](std::ostream& out) { write_instance(out, inst, comments); });
  return kOk;
}

int cmd_dot(const std::string& path, const std::string& solution_path) {
  const Instance inst = read_instance_file(path);
  VertexSet s;
  if (!solution_path.empty()) s = read_solution_file(solution_path, inst.vertex_count());
  std::cout << to_dot(inst, s);
  return kOk;
}

int cmd_bench(const std::string& dir, const std::string& algo, int threads) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".vcn") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::cout << "instance,n,m,r_max,algo,size,optimal,wall_time\n" << std::flush;

  std::mutex out_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<int> failures{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      std::ostringstream row;
      try {
        const Instance inst = read_instance_file(files[i].string());
        const auto start = std::chrono::steady_clock::now();
        const Outcome result = run_algo(inst, algo, "");
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!is_feasible(inst, result.solution)) {
          throw std::logic_error("solver returned an infeasible set");
        }
        std::string optimal = "unknown";
        if (result.algo == "block" || result.algo == "lowreq" || result.algo == "brute" ||
            result.algo == "exact") {
          optimal = "yes";
        } else if (inst.vertex_count() <= brute_cap()) {
          optimal = brute_force_min(inst).size() == result.solution.size() ? "yes" : "no";
        }
        row << files[i].filename().string() << ',' << inst.vertex_count() << ','
            << inst.graph.edge_count() << ',' << inst.max_requirement() << ',' << result.algo
            << ',' << result.solution.size() << ',' << optimal << ',' << seconds << '\n';
      } catch (const std::exception& e) {
        ++failures;
        row << files[i].filename().string() << ",,,," << algo << ",,error,\n";
        std::lock_guard lock(out_mutex);
        std::cerr << files[i].filename().string() << ": " << e.what() << '\n';
      }
      std::lock_guard lock(out_mutex);
      std::cout << row.str() << std::flush;
    }
  };
  const int count = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return failures ? kDispatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector connectivity solver"};
  app.require_subcommand(1);
  const std::vector<std::string> algos{"auto", "exact", "block",        "lowreq",
                                       "greedy", "brute", "brute-hitting"};

  std::string instance, solution, mapping, out, algo = "auto";
  bool certify = false, all_sets = false;
  int bipartite = 0;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  GenOptions gen;
  std::function<int()> action;

  auto* solve = app.add_subcommand("solve", "Compute a vector connectivity set");
  solve->add_option("instance", instance, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("-a,--algo", algo, "Solver")->check(CLI::IsMember(algos));
  solve->add_option("-m,--mapping", mapping, "Gadget mapping (brute-hitting uses its triples)")
      ->check(CLI::ExistingFile);
  solve->add_flag("--certify", certify, "Attach a validated fan for every vertex outside the set");
  solve->add_option("-o,--output", out, "Solution file (default stdout)");
  solve->callback([&] { action = [&] { return cmd_solve(instance, algo, mapping, certify, out); }; });

  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  verify->add_option("solution", solution)->required()->check(CLI::ExistingFile);
  verify->callback([&] { action = [&] { return cmd_verify(instance, solution); }; });

  auto* reduce = app.add_subcommand("reduce", "Build the gadget instance of a cubic graph");
  reduce->add_option("graph", instance, "Graph file (p edge or p vcn)")->required()
      ->check(CLI::ExistingFile);
  reduce->add_option("--bipartite", bipartite, "Subdivide every gadget edge 2k+1 times")
      ->check(CLI::PositiveNumber);
  reduce->add_option("-o,--output", out, "Output prefix for <prefix>.vcn and <prefix>.map")
      ->required();
  reduce->callback([&] { action = [&] { return cmd_reduce(instance, bipartite, out); }; });

  auto* extract = app.add_subcommand("extract-cover", "Turn a gadget solution into a vertex cover");
  extract->add_option("mapping", mapping)->required()->check(CLI::ExistingFile);
  extract->add_option("solution", solution)->required()->check(CLI::ExistingFile);
  extract->add_option("-o,--output", out);
  extract->callback([&] { action = [&] { return cmd_extract_cover(mapping, solution, out); }; });

  auto* hyper = app.add_subcommand("hypergraph", "List the violating connected sets");
  hyper->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  hyper->add_flag("--all", all_sets, "Keep non-minimal sets too");
  hyper->add_option("-o,--output", out);
  hyper->callback([&] { action = [&] { return cmd_hypergraph(instance, all_sets, out); }; });

  auto* generate = app.add_subcommand("gen", "Generate a seeded random instance");
  generate->add_option("-k,--kind", gen.kind)->check(CLI::IsMember({"block", "cactus", "random"}));
  generate->add_option("-n", gen.n)->check(CLI::PositiveNumber);
  generate->add_option("-s,--seed", gen.seed);
  generate->add_option("-r,--r-max", gen.r_max)->check(CLI::NonNegativeNumber);
  generate->add_option("-f,--free-fraction", gen.free_fraction)->check(CLI::Range(0.0, 1.0));
  generate->add_option("-p", gen.p, "Edge probability for --kind random")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--clique-max", gen.clique_max)->check(CLI::Range(2, 1 << 20));
  generate->add_option("-o,--output", gen.out);
  generate->callback([&] { action = [&] { return cmd_gen(gen); }; });

  auto* dot = app.add_subcommand("dot", "Print Graphviz text");
  dot->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  dot->add_option("solution", solution)->check(CLI::ExistingFile);
  dot->callback([&] { action = [&] { return cmd_dot(instance, solution); }; });

  auto* bench = app.add_subcommand("bench", "Solve every .vcn file in a directory, CSV out");
  bench->add_option("corpus", instance)->required()->check(CLI::ExistingDirectory);
  bench->add_option("-a,--algo", algo)->check(CLI::IsMember(algos));
  bench->add_option("-j,--threads", threads)->check(CLI::PositiveNumber);
  bench->callback([&] { action = [&] { return cmd_bench(instance, algo, threads); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDispatch;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDispatch;
  } catch (const ClassificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDispatch;
  }
}
