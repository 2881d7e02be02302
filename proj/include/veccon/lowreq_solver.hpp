#ifndef VECCON_LOWREQ_SOLVER_HPP
#define VECCON_LOWREQ_SOLVER_HPP

#include "veccon/graph.hpp"
#include "veccon/instance.hpp"

namespace veccon {

/// Exact solver for connected instances with every requirement at most 2
/// and no free vertices.
///
/// Leaf blocks whose non-cut vertices all need at most one path are pruned
/// repeatedly. If a single block survives, the optimum has at most two
/// vertices and is found by search; otherwise one non-cut vertex per
/// surviving leaf block is optimal.
VertexSet solve_lowreq(const Instance& inst);

}  // namespace veccon

#endif  // VECCON_LOWREQ_SOLVER_HPP
