#ifndef VECCON_BLOCK_SOLVER_HPP
#define VECCON_BLOCK_SOLVER_HPP

#include "veccon/graph.hpp"
#include "veccon/instance.hpp"

namespace veccon {

/// Minimum vector connectivity set for a connected instance with free
/// vertices. The graph is peeled one leaf block at a time; each block is
/// solved by fsveccon_biconnect. Exact on every connected graph, polynomial
/// when all blocks are cliques or cycles (other blocks go through the
/// exhaustive fallback and are capped by brute_cap()).
VertexSet fsveccon(const Instance& inst);

/// Base case for graphs without cut vertices: complete graphs, cycles, or
/// exhaustive search.
VertexSet fsveccon_biconnect(const Instance& inst);

/// Best (k, l) prefix pair of free / non-free vertices sorted by decreasing
/// requirement.
VertexSet complete_solver(const Instance& inst);

/// Forced vertices plus the cheapest of at most two extra vertices.
VertexSet cycle_solver(const Instance& inst);

/// fsveccon restricted to graphs whose blocks are cliques or cycles; throws
/// ClassificationError otherwise.
VertexSet solve_block_cactus(const Instance& inst);

enum class BlockKind { kClique, kCycle, kOther };

BlockKind classify_block(const Graph& block);
bool is_block_graph(const Graph& g);
bool is_block_cactus(const Graph& g);

}  // namespace veccon

#endif  // VECCON_BLOCK_SOLVER_HPP
