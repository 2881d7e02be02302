#include "veccon/block_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "veccon/errors.hpp"
#include "veccon/fans.hpp"
#include "veccon/oracle.hpp"

namespace veccon {
namespace {

// Every candidate u is r(u)-linked to the marked targets. Candidates with
// large requirements fail most often, so they are tried first.
bool all_reach(const Graph& g, const std::vector<int>& r, const std::vector<char>& targets,
               std::vector<Vertex> candidates) {
  for (Vertex u : candidates) {
    if (r[u] > g.degree(u) + (targets[u] ? 1 : 0)) return false;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Vertex a, Vertex b) { return r[a] > r[b]; });
  for (Vertex u : candidates) {
    if (!reaches(g, u, targets, r[u])) return false;
  }
  return true;
}

// Restricts `inst` to `keep`, composing the relabeling with `to_orig`.
Instance shrink(const Instance& inst, const VertexSet& keep, std::vector<Vertex>& to_orig) {
  Subgraph sub = induced_subgraph(inst.graph, keep);
  Instance out = restrict_instance(inst, sub);
  std::vector<Vertex> composed(sub.to_parent.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) composed[i] = to_orig[sub.to_parent[i]];
  to_orig = std::move(composed);
  return out;
}

int local_index(const VertexSet& sorted_ids, Vertex v) {
  return static_cast<int>(std::lower_bound(sorted_ids.begin(), sorted_ids.end(), v) -
                          sorted_ids.begin());
}

}  // namespace

VertexSet fsveccon(const Instance& inst) {
  inst.validate();
  if (!is_connected(inst.graph)) throw InputError("fsveccon: graph is disconnected");

  Instance cur = inst;
  std::vector<Vertex> to_orig(cur.vertex_count());
  std::iota(to_orig.begin(), to_orig.end(), 0);
  VertexSet solution;
  const int block_budget = block_decomposition(cur.graph).block_count();

  for (int round = 0;; ++round) {
    if (round > block_budget) {
      throw std::logic_error("fsveccon: recursion did not shrink the block tree");
    }
    const Graph& g = cur.graph;
    const int n = g.vertex_count();
    const BlockDecomposition dec = block_decomposition(g);
    if (dec.block_count() == 1) {
      for (Vertex v : fsveccon_biconnect(cur)) solution.push_back(to_orig[v]);
      break;
    }
    if (is_feasible(cur, {})) break;

    int leaf = dec.leaf_blocks.front();
    for (int b : dec.leaf_blocks) {
      if (dec.blocks[b].front() < dec.blocks[leaf].front()) leaf = b;
    }
    const VertexSet block = dec.blocks[leaf];
    const Vertex v = dec.cut_vertex_of_leaf(leaf);
    VertexSet rest;  // R = G - (B - v)
    for (Vertex u = 0; u < n; ++u) {
      if (u == v || !contains(block, u)) rest.push_back(u);
    }

    std::vector<char> targets = cur.free_mask();
    targets[v] = 1;
    VertexSet block_side, rest_side;
    for (Vertex u : block) {
      if (u != v) block_side.push_back(u);
    }
    for (Vertex u : rest) {
      if (u != v) rest_side.push_back(u);
    }
    const bool beta = all_reach(g, cur.requirements, targets, block_side);
    const bool rho = all_reach(g, cur.requirements, targets, rest_side);

    if (beta && rho) {
      solution.push_back(to_orig[v]);
      break;
    }

    if (beta != rho) {
      const VertexSet& keep = beta ? rest : block;
      const bool v_free = cur.is_free(v);
      bool free_outside = v_free;
      std::vector<char> outside_free(n, 0);
      for (Vertex f : cur.free_set) {
        if (!contains(keep, f)) {
          outside_free[f] = 1;
          free_outside = true;
        }
      }
      if (free_outside) {
        const int r_v = cur.requirements[v];
        const int k = count_disjoint_paths(g, v, outside_free, r_v + 1);
        cur.requirements[v] = std::max(r_v - k + (v_free ? 0 : 1), 0);
        if (!v_free) cur.free_set = normalized(set_union(cur.free_set, {v}));
      }
      cur = shrink(cur, keep, to_orig);
      continue;
    }

    // Neither side is covered by F + v: solve the leaf block for every
    // requirement of v and keep the largest one that costs nothing extra.
    Subgraph block_sub = induced_subgraph(g, block);
    Instance block_inst = restrict_instance(cur, block_sub);
    const int v_local = local_index(block, v);
    block_inst.free_set = normalized(set_union(block_inst.free_set, {v_local}));

    const int r_v = cur.requirements[v];
    std::vector<VertexSet> per_level;
    for (int i = 0; i <= r_v; ++i) {
      block_inst.requirements[v_local] = i;
      per_level.push_back(fsveccon_biconnect(block_inst));
    }
    int best_level = 0;
    for (int j = 0; j <= r_v; ++j) {
      if (per_level[j].size() == per_level[0].size()) best_level = j;
    }
    const VertexSet& block_solution = per_level[best_level];
    if (contains(block_solution, v_local)) {
      throw std::logic_error("fsveccon: block solution contains the cut vertex");
    }
    // v gains a zero-length path in R once it is free; a vertex that was
    // already free had that path counted in r(v) from the start.
    const int r_max = std::max(2, cur.max_requirement());
    const int rewritten = r_v - best_level + 1 + (cur.is_free(v) ? 0 : 1);
    if (rewritten > r_max) {
      throw std::logic_error("fsveccon: rewritten requirement " + std::to_string(rewritten) +
                             " exceeds r_max " + std::to_string(r_max));
    }
    for (Vertex u : block_solution) solution.push_back(to_orig[block_sub.to_parent[u]]);

    cur.requirements[v] = rewritten;
    cur.free_set = normalized(set_union(cur.free_set, {v}));
    cur = shrink(cur, rest, to_orig);
  }
  return normalize(solution);
}

VertexSet fsveccon_biconnect(const Instance& inst) {
  inst.validate();
  switch (classify_block(inst.graph)) {
    case BlockKind::kClique:
      return complete_solver(inst);
    case BlockKind::kCycle:
      return cycle_solver(inst);
    case BlockKind::kOther:
      break;
  }
  return brute_force_min(inst);
}

VertexSet complete_solver(const Instance& inst) {
  inst.validate();
  if (!is_complete(inst.graph)) throw InputError("complete_solver: graph is not complete");
  const int n = inst.vertex_count();

  std::vector<Vertex> free, paid;
  for (Vertex v = 0; v < n; ++v) (inst.is_free(v) ? free : paid).push_back(v);
  auto by_requirement = [&](Vertex a, Vertex b) {
    return inst.requirements[a] != inst.requirements[b]
               ? inst.requirements[a] > inst.requirements[b]
               : a < b;
  };
  std::sort(free.begin(), free.end(), by_requirement);
  std::sort(paid.begin(), paid.end(), by_requirement);

  const int nf = static_cast<int>(free.size());
  const int np = static_cast<int>(paid.size());
  // In K_n a vertex outside S reaches |S + F - u| distinct targets by direct
  // edges, plus itself when free; both cases equal |S + F| = |F| + l.
  auto feasible = [&](int k, int l) {
    const int targets = nf + l;
    const int worst_free = k < nf ? inst.requirements[free[k]] : 0;
    const int worst_paid = l < np ? inst.requirements[paid[l]] : 0;
    return std::max(worst_free, worst_paid) <= targets;
  };
  for (int total = 0; total <= n; ++total) {
    for (int k = std::max(0, total - np); k <= std::min(total, nf); ++k) {
      const int l = total - k;
      if (!feasible(k, l)) continue;
      VertexSet out(free.begin(), free.begin() + k);
      out.insert(out.end(), paid.begin(), paid.begin() + l);
      return normalize(out);
    }
  }
  throw std::logic_error("complete_solver: selecting every vertex must be feasible");
}

VertexSet cycle_solver(const Instance& inst) {
  inst.validate();
  if (!is_cycle(inst.graph)) throw InputError("cycle_solver: graph is not a cycle");
  const int n = inst.vertex_count();

  VertexSet forced;
  for (Vertex v = 0; v < n; ++v) {
    if (inst.requirements[v] > 2 + (inst.is_free(v) ? 1 : 0)) forced.push_back(v);
  }
  if (is_feasible(inst, forced)) return forced;

  std::vector<Vertex> extra;
  for (Vertex v = 0; v < n; ++v) {
    if (!contains(forced, v)) extra.push_back(v);
  }
  for (Vertex a : extra) {
    VertexSet s = normalized(set_union(forced, {a}));
    if (is_feasible(inst, s)) return s;
  }
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (std::size_t j = i + 1; j < extra.size(); ++j) {
      VertexSet s = normalized(set_union(forced, {extra[i], extra[j]}));
      if (is_feasible(inst, s)) return s;
    }
  }
  // Two extra targets give every other vertex one target in each direction.
  throw std::logic_error("cycle_solver: no solution with at most two extra vertices");
}

BlockKind classify_block(const Graph& block) {
  if (is_complete(block)) return BlockKind::kClique;
  if (is_cycle(block)) return BlockKind::kCycle;
  return BlockKind::kOther;
}

namespace {

bool all_blocks(const Graph& g, bool allow_cycles) {
  if (!is_connected(g)) return false;
  for (const auto& b : block_decomposition(g).blocks) {
    BlockKind kind = classify_block(induced_subgraph(g, b).graph);
    if (kind == BlockKind::kOther || (kind == BlockKind::kCycle && !allow_cycles)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_block_graph(const Graph& g) { return all_blocks(g, false); }
bool is_block_cactus(const Graph& g) { return all_blocks(g, true); }

VertexSet solve_block_cactus(const Instance& inst) {
  if (!is_connected(inst.graph)) throw InputError("solve_block_cactus: graph is disconnected");
  if (!is_block_cactus(inst.graph)) {
    throw ClassificationError("solve_block_cactus: some block is neither a clique nor a cycle");
  }
  return fsveccon(inst);
}

}  // namespace veccon
