#include "veccon/lowreq_solver.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "veccon/errors.hpp"
#include "veccon/oracle.hpp"

namespace veccon {

VertexSet solve_lowreq(const Instance& inst) {
  inst.validate();
  if (!inst.free_set.empty()) throw InputError("solve_lowreq: free set must be empty");
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    if (inst.requirements[v] > 2) {
      throw InputError("solve_lowreq: requirement " + std::to_string(inst.requirements[v]) +
                       " at vertex " + std::to_string(v) + " exceeds 2");
    }
  }
  if (!is_connected(inst.graph)) throw InputError("solve_lowreq: graph is disconnected");
  if (is_feasible(inst, {})) return {};

  // Prune leaf blocks made only of requirement <= 1 vertices.
  Subgraph pruned{inst.graph, {}};
  pruned.to_parent.resize(inst.vertex_count());
  std::iota(pruned.to_parent.begin(), pruned.to_parent.end(), 0);
  BlockDecomposition dec = block_decomposition(pruned.graph);
  while (true) {
    int removable = -1;
    for (int b : dec.leaf_blocks) {
      const Vertex cut = dec.cut_vertex_of_leaf(b);
      bool low = true;
      for (Vertex u : dec.blocks[b]) {
        if (u != cut && inst.requirements[pruned.to_parent[u]] > 1) low = false;
      }
      if (low) {
        removable = b;
        break;
      }
    }
    if (removable < 0) break;
    const Vertex cut = dec.cut_vertex_of_leaf(removable);
    VertexSet keep;
    for (Vertex u = 0; u < pruned.graph.vertex_count(); ++u) {
      if (u == cut || !contains(dec.blocks[removable], u)) keep.push_back(u);
    }
    Subgraph next = induced_subgraph(pruned.graph, keep);
    for (auto& p : next.to_parent) p = pruned.to_parent[p];
    pruned = std::move(next);
    dec = block_decomposition(pruned.graph);
  }

  if (dec.block_count() == 1) {
    const int n = inst.vertex_count();
    for (Vertex a = 0; a < n; ++a) {
      if (is_feasible(inst, {a})) return {a};
    }
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (is_feasible(inst, {a, b})) return {a, b};
      }
    }
    throw std::logic_error("solve_lowreq: biconnected core needs more than two vertices");
  }

  VertexSet solution;
  for (int b : dec.leaf_blocks) {
    Vertex pick = -1;
    int pick_r = -1;
    for (Vertex u : dec.blocks[b]) {
      if (dec.is_cut_vertex(u)) continue;
      const int r = inst.requirements[pruned.to_parent[u]];
      if (r > pick_r) {
        pick = u;
        pick_r = r;
      }
    }
    solution.push_back(pruned.to_parent[pick]);
  }
  return normalize(solution);
}

}  // namespace veccon
